"""Random semi-bar and semi-arc models.

Per-trial seeds come from a splitmix64 step, ``seed_i = mix64(seed, i)``,
so any trial can be replayed on its own and parallel runs aggregate to the
same numbers as serial ones.
"""
from __future__ import annotations

import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Optional

from . import bounds
from .errors import VisError
from .geometry import Representation, semi_arc, semi_bar
from .graph import Graph
from .sightlines import _semi_bar_edges, semi_arc_center_pairs, visibility_graph

MASK = (1 << 64) - 1
DYADIC_BITS = 64
ENUM_LIMIT = 8


def mix64(seed: int, i: int) -> int:
    z = (seed + (i + 1) * 0x9E3779B97F4A7C15) & MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def random_permutation(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.randrange(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return perm


def _semibar_lengths(n: int, seed: int) -> list[int]:
    return [p + 1 for p in random_permutation(n, random.Random(seed))]


def _semiarc_numerators(n: int, seed: int) -> list[int]:
    """Odd numerators over 2**64; extents in units of pi lie in (0, 2)."""
    rng = random.Random(seed)
    top = 2 << DYADIC_BITS
    seen: set[int] = set()
    out = []
    for _ in range(n):
        x = 2 * rng.getrandbits(DYADIC_BITS) + 1
        # ties resolved in rank order: a later arc steps to the next free odd value
        while x in seen:
            x = x + 2 if x + 2 < top else 1
        seen.add(x)
        out.append(x)
    return out


def sample_semibar(n: int, k: int, seed: int) -> tuple[Representation, Graph]:
    rep = semi_bar(_semibar_lengths(n, seed))
    return rep, visibility_graph(rep, k)


def sample_semiarc(n: int, k: int, seed: int) -> tuple[Representation, Graph, int]:
    nums = _semiarc_numerators(n, seed)
    rep = semi_arc([Fraction(x, 1 << DYADIC_BITS) for x in nums])
    same, center_only = _semiarc_counts(nums, k)
    g = visibility_graph(rep, k)
    return rep, g, center_only


def _semiarc_counts(nums: list[int], k: int) -> tuple[set, int]:
    same = _semi_bar_edges(nums, k)
    center = semi_arc_center_pairs(nums, 1 << DYADIC_BITS, k)
    return same, len(center - same)


def _record_count(values: list[int], i: int) -> int:
    """Elements with exactly i-1 larger predecessors."""
    return sum(1 for p, x in enumerate(values) if sum(1 for y in values[:p] if y > x) == i - 1)


STATISTICS = {
    "semibar": ("edges", "records"),
    "semiarc": ("edges", "center_only", "records"),
}


def _trial(model: str, n: int, k: int, statistic: str, seed: int) -> int:
    stat, _, arg = statistic.partition(":")
    if model == "semibar":
        values = _semibar_lengths(n, seed)
        if stat == "edges":
            return len(_semi_bar_edges(values, k))
    else:
        values = _semiarc_numerators(n, seed)
        if stat in ("edges", "center_only"):
            same, only = _semiarc_counts(values, k)
            return only if stat == "center_only" else len(same) + only
    if stat == "records":
        return _record_count(values, int(arg))
    raise VisError("bad_statistic", f"{statistic!r} for model {model!r}")


def _check(model: str, statistic: str):
    if model not in STATISTICS:
        raise VisError("bad_model", model)
    if statistic.partition(":")[0] not in STATISTICS[model]:
        raise VisError("bad_statistic", f"{statistic!r} for model {model!r}")


def exact_expectation_by_enumeration(n: int, k: int, statistic: str = "edges",
                                     model: Optional[str] = None) -> Fraction:
    """Average of the statistic over all n! rank orders.

    ``edges`` defaults to the semi-bar model.  ``center_only`` uses semi-arcs
    whose extents are a permutation of the fixed grid (2i-1)/n * (1 - 2**-20)
    times pi, a generic stand-in for the continuous model.
    """
    if n > ENUM_LIMIT:
        raise VisError("too_large", f"enumeration limited to n <= {ENUM_LIMIT}")
    model = model or ("semiarc" if statistic == "center_only" else "semibar")
    _check(model, statistic)
    stat, _, arg = statistic.partition(":")
    if model == "semiarc":
        shrink = Fraction((1 << 20) - 1, 1 << 20)
        grid = [Fraction(2 * i - 1, n) * shrink for i in range(1, n + 1)]
        den = grid[0].denominator * n
        grid = [int(g * den) for g in grid]
        one = den
    total = 0
    count = 0
    for perm in permutations(range(n)):
        if model == "semibar":
            values = [p + 1 for p in perm]
            value = len(_semi_bar_edges(values, k)) if stat == "edges" else None
        else:
            values = [grid[p] for p in perm]
            same = _semi_bar_edges(values, k)
            only = len(semi_arc_center_pairs(values, one, k) - same)
            value = only if stat == "center_only" else len(same) + only if stat == "edges" else None
        if stat == "records":
            value = _record_count(values, int(arg))
        total += value
        count += 1
    return Fraction(total, count)


@dataclass(frozen=True)
class EnsembleStats:
    statistic: str
    trials: int
    mean: float
    sample_stddev: float
    confidence_radius: float
    seed: int
    exact_reference: Optional[Fraction] = None
    reference_kind: Optional[str] = None  # "exact" or "upper_bound"
    values: tuple = ()


def _threads() -> int:
    raw = os.environ.get("VISKIT_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise VisError("bad_environment", f"VISKIT_THREADS={raw!r}") from None
    if value < 1:
        raise VisError("bad_environment", f"VISKIT_THREADS={raw!r}")
    return value


def reference(model: str, n: int, k: int, statistic: str):
    stat, _, arg = statistic.partition(":")
    if model == "semibar" and stat == "edges":
        return bounds.expected_edges_semibar(n, k), "exact"
    if model == "semiarc" and stat == "center_only":
        return bounds.center_expectation_bound(n, k), "upper_bound"
    if stat == "records" and 1 <= int(arg) <= n:
        return bounds.expected_records(int(arg), n), "exact"
    return None, None


def _map(fn, args: list[tuple]) -> list:
    workers = min(_threads(), len(args))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, *zip(*args), chunksize=max(1, len(args) // (4 * workers))))
    return [fn(*a) for a in args]


def _row(model: str, n: int, k: int, seed: int) -> tuple:
    if model == "semibar":
        return (len(_semi_bar_edges(_semibar_lengths(n, seed), k)),)
    same, only = _semiarc_counts(_semiarc_numerators(n, seed), k)
    return (len(same) + only, only)


ROW_COLUMNS = {"semibar": ("edges",), "semiarc": ("edges", "center_only")}


def trial_rows(model: str, n: int, k: int, trials: int, seed: int) -> list[tuple]:
    """Per-trial values of every column in ``ROW_COLUMNS[model]``; trial i uses mix64(seed, i)."""
    if model not in ROW_COLUMNS:
        raise VisError("bad_model", model)
    if trials < 1:
        raise VisError("bad_parameters", "trials must be >= 1")
    return _map(_row, [(model, n, k, mix64(seed, i)) for i in range(trials)])


def summarize(statistic: str, values: list[int], seed: int, reference=(None, None)) -> EnsembleStats:
    trials = len(values)
    mean = Fraction(sum(values), trials)
    if trials > 1:
        sd = math.sqrt(sum((v - mean) ** 2 for v in values) / (trials - 1))
    else:
        sd = 0.0
    ref, kind = reference
    return EnsembleStats(
        statistic=statistic, trials=trials, mean=float(mean), sample_stddev=sd,
        confidence_radius=4 * sd / math.sqrt(trials), seed=seed,
        exact_reference=ref, reference_kind=kind, values=tuple(values),
    )


def monte_carlo(model: str, n: int, k: int, statistic: str, trials: int, seed: int) -> EnsembleStats:
    if trials < 1:
        raise VisError("bad_parameters", "trials must be >= 1")
    _check(model, statistic)
    values = _map(_trial, [(model, n, k, statistic, mix64(seed, i)) for i in range(trials)])
    return summarize(statistic, values, seed, reference(model, n, k, statistic))
