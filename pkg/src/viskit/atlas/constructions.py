"""Explicit extremal and named representations, each checked by the engine."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from ..bounds import max_edges
from ..errors import VisError
from ..geometry import Representation, semi_arc
from ..sightlines import visibility_graph

F = Fraction


def default_epsilon(k: int) -> Fraction:
    return F(1, 100 * (k + 2))


def _check_epsilon(eps: Fraction, limit: Fraction):
    if not 0 < eps < limit:
        raise VisError("bad_epsilon", f"epsilon must lie in (0, {limit})")


def gen_semiarc_max(n: int, k: int, epsilon: Optional[Fraction] = None) -> Representation:
    """Semi-arc arrangement with (k+1)(2n - (k+2)/2) edges for n >= 5k+5.

    Five groups of k+1 arcs sit at pi/5, 3pi/5, pi, 7pi/5, 9pi/5 with
    offsets i*eps inside a group.  Extra arcs go between the third and
    fourth groups with extents just under pi/10.
    """
    if n < 5 * k + 5:
        raise VisError("n_too_small", f"need n >= {5 * k + 5}, got {n}")
    eps = default_epsilon(k) if epsilon is None else F(epsilon)
    _check_epsilon(eps, F(1, 5 * (k + 1)))
    groups = [F(1, 5), F(3, 5), F(1), F(7, 5), F(9, 5)]
    ext = [b + i * eps for b in groups for i in range(k + 1)]
    extra = n - 5 * k - 5
    filler = [F(1, 10) - i * eps / (extra + 1) for i in range(extra)]
    rep = semi_arc(ext[: 3 * k + 3] + filler + ext[3 * k + 3:])
    _verify(rep, k, max_edges("semi_arc", n, k).value)
    return rep


def gen_complete_semiarc(k: int, epsilon: Optional[Fraction] = None) -> Representation:
    """Semi-arc arrangement of K_{3k+4}."""
    if k < 0:
        raise VisError("bad_parameters", "k must be >= 0")
    eps = default_epsilon(k) if epsilon is None else F(epsilon)
    _check_epsilon(eps, F(1, 3 * (k + 1)))
    ext = (
        [F(1, 3) - i * eps for i in range(k + 1)]
        + [F(2, 3) - i * eps for i in range(k + 1)]
        + [F(1) + i * eps for i in range(k + 1)]
        + [F(5, 3)]
    )
    rep = semi_arc(ext)
    n = 3 * k + 4
    _verify(rep, k, n * (n - 1) // 2)
    return rep


def gen_polygonal(m: int) -> Representation:
    """m semi-arcs with extents 2i*pi/(m+1), ending on vertices of a regular (m+1)-gon."""
    if m < 3:
        raise VisError("bad_parameters", "polygonal arrangements need m >= 3")
    return semi_arc([F(2 * i, m + 1) for i in range(1, m + 1)])


def _verify(rep: Representation, k: int, edges: int):
    got = visibility_graph(rep, k).m
    if got != edges:
        raise VisError("construction_unverified", f"expected {edges} edges, engine found {got}")
