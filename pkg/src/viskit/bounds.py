"""Closed-form edge bounds and random-model expectations."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import VisError


@dataclass(frozen=True)
class EdgeBound:
    value: int
    tight: bool
    source: str


def _exact_int(x: Fraction) -> int:
    assert x.denominator == 1, x
    return int(x)


def max_edges(kind: str, n: int, k: int) -> EdgeBound:
    """Maximum edge count of a k-visibility graph on n vertices of the given class.

    Just past the complete regime the closed forms exceed C(n, 2); the value
    is capped there and reported as not tight.
    """
    if n < 1 or k < 0:
        raise VisError("bad_parameters", f"n={n}, k={k}")
    if kind == "arc":
        if n <= 4 * k + 4 or (k == 0 and n == 5):
            return EdgeBound(comb(n, 2), k == 0 and n <= 5, "complete")
        value = _exact_int((k + 1) * (3 * n - Fraction(3 * k + 6, 2)))
        return _capped(value, n, k == 0, "arc")
    if kind == "semi_arc":
        if n <= 3 * k + 4:
            return EdgeBound(comb(n, 2), True, "complete")
        value = _exact_int((k + 1) * (2 * n - Fraction(k + 2, 2)))
        return _capped(value, n, n >= 5 * k + 5, "semi_arc")
    if kind == "semi_bar":
        if n < 2 * k + 2:
            return EdgeBound(comb(n, 2), True, "complete")
        return EdgeBound((k + 1) * (2 * n - 2 * k - 3), True, "semi_bar")
    raise VisError("unsupported_kind", f"no edge formula for {kind!r}")


def _capped(value: int, n: int, tight: bool, source: str) -> EdgeBound:
    if value > comb(n, 2):
        return EdgeBound(comb(n, 2), False, source + "_capped")
    return EdgeBound(value, tight, source)


def harmonic(a: int, b: int) -> Fraction:
    """sum_{j=a}^{b} 1/j (zero when a > b)."""
    return sum((Fraction(1, j) for j in range(a, b + 1)), Fraction(0))


def expected_edges_semibar(n: int, k: int) -> Fraction:
    if n <= k + 2:
        return Fraction(comb(n, 2))
    return Fraction(k + 1, 2) * (4 * n - 3 * k - 6 - 2 * (k + 2) * harmonic(k + 3, n))


def azuma_tail(n: int, k: int, t) -> float:
    """Bound on P(|E - E[E]| > (k+1) t); a float, unlike everything else here."""
    if t < 0:
        raise VisError("bad_parameters", f"t={t}")
    return min(1.0, 2.0 * math.exp(-2.0 * float(t) ** 2 / n))


def expected_records(i: int, n: int) -> Fraction:
    """Expected number of elements with exactly i-1 larger predecessors."""
    if not 1 <= i <= n:
        raise VisError("bad_parameters", f"need 1 <= i <= n, got i={i}, n={n}")
    return harmonic(i, n)


def center_expectation_bound(n: int, k: int) -> Fraction:
    """sum_{i=1}^{k+1} (k+2-i) E_i, bounding the mean number of center-only edges."""
    return sum(
        ((k + 2 - i) * expected_records(i, n) for i in range(1, min(k + 1, n) + 1)),
        Fraction(0),
    )
