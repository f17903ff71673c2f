"""The k-visibility engine.

Visibility between two elements is decided by sweeping the sightline
parameter (an angle for arcs, an abscissa for bars) over every critical
value and every midpoint between consecutive critical values.  Between two
critical values the set of elements met by a sightline is constant, so this
finite set of evaluation points decides everything exactly.

Arc sightlines come in two families.  A *same-side* sightline is a radial
segment at angle ``t`` joining two arcs that both contain ``t``.  A
*through-center* sightline runs from the lower-radius arc at angle ``t``
through the origin to the other arc at ``t + pi``; its parameter is always
the angle on the lower-radius arc.
"""
from __future__ import annotations

from bisect import bisect_left, insort
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import NamedTuple, Optional

from .errors import VisError
from .geometry import Representation, antipode, critical_values, in_general_position
from .graph import Graph, _norm

SAME_SIDE = "same_side"
THROUGH_CENTER = "through_center"
VERTICAL = "vertical"


@dataclass(frozen=True)
class Sightline:
    family: str
    parameter: Fraction
    endpoints: tuple[int, int]


@dataclass(frozen=True)
class VisibilityRegion:
    """Closed parameter interval ``[low, high]`` (counterclockwise; may wrap)."""

    edge: tuple[int, int]
    family: str
    low: Optional[Fraction]
    high: Optional[Fraction]
    full: bool = False
    low_owners: tuple = ()
    high_owners: tuple = ()

    @property
    def boundary_owners(self) -> tuple:
        return tuple(sorted(set(self.low_owners) | set(self.high_owners)))

    @property
    def degenerate(self) -> bool:
        return not self.full and self.low == self.high


@dataclass
class EdgeClassification:
    positive: dict = field(default_factory=lambda: defaultdict(list))
    negative: dict = field(default_factory=lambda: defaultdict(list))
    # (edge, family, region index, arc id, sign) per region
    assignments: list = field(default_factory=list)
    # edges owning a region with no boundary at all
    flagged: list = field(default_factory=list)

    def counts(self, arc: int) -> tuple[int, int]:
        return len(self.positive.get(arc, ())), len(self.negative.get(arc, ()))


# -- evaluation points ------------------------------------------------------------


def critical_parameters(rep: Representation) -> list[Fraction]:
    """Endpoint angles and their antipodes (arcs) or endpoint abscissae (bars), sorted."""
    return critical_values(rep)


def _eval_points(rep: Representation) -> list[Fraction]:
    """Critical values at even indices, midpoints at odd indices."""
    crit = critical_values(rep)
    pts: list[Fraction] = []
    if rep.is_arc_kind:
        for i, c in enumerate(crit):
            nxt = crit[i + 1] if i + 1 < len(crit) else crit[0] + 2
            pts.append(c)
            pts.append(((c + nxt) / 2) % 2)
    else:
        for i, c in enumerate(crit):
            pts.append(c)
            if i + 1 < len(crit):
                pts.append((c + crit[i + 1]) / 2)
    return pts


# -- direct definitions (one pair, one parameter) ------------------------------


def _between(rep, lo_rank, hi_rank):
    return [e for e in rep.elements if lo_rank < e.rank < hi_rank]


def _valid(rep: Representation, a, b, family: str, t: Fraction, k: int) -> bool:
    """Straight from the definition; ``a`` is the lower-ranked element."""
    if family == THROUGH_CENTER:
        t2 = antipode(t)
        if not (a.contains(t) and b.contains(t2)):
            return False
        blockers = {
            c.id for c in rep.elements
            if c.id not in (a.id, b.id)
            and ((c.rank < a.rank and c.contains(t)) or (c.rank < b.rank and c.contains(t2)))
        }
        return len(blockers) <= k
    if not (a.contains(t) and b.contains(t)):
        return False
    return sum(1 for c in _between(rep, a.rank, b.rank) if c.contains(t)) <= k


def _families(rep: Representation) -> tuple[str, ...]:
    return (SAME_SIDE, THROUGH_CENTER) if rep.is_arc_kind else (VERTICAL,)


def _ordered(rep: Representation, u: int, v: int):
    if u == v:
        raise VisError("bad_vertex", "u and v must differ")
    a, b = rep.element(u), rep.element(v)
    return (a, b) if a.rank < b.rank else (b, a)


def _pair_valid_indices(rep, u, v, k, pts, family) -> list[int]:
    a, b = _ordered(rep, u, v)
    return [i for i, t in enumerate(pts) if _valid(rep, a, b, family, t, k)]


def visible_pair(rep: Representation, u: int, v: int, k: int) -> Optional[Sightline]:
    """A witness sightline between ``u`` and ``v``, or ``None``."""
    a, b = _ordered(rep, u, v)
    pts = _eval_points(rep)
    for family in _families(rep):
        for t in pts:
            if _valid(rep, a, b, family, t, k):
                return Sightline(family, t, (a.id, b.id))
    return None


# -- the sweep ------------------------------------------------------------------


def _sweep(rep: Representation, k: int):
    """Map ``(edge, family) -> set of valid evaluation indices``."""
    pts = _eval_points(rep)
    valid: dict = defaultdict(set)
    elems = rep.elements  # sorted by rank
    if not rep.is_arc_kind:
        for i, x in enumerate(pts):
            line = [e for e in elems if e.contains(x)]
            for p in range(len(line)):
                for q in range(p + 1, min(len(line), p + k + 2)):
                    valid[(_norm(line[p].id, line[q].id), VERTICAL)].add(i)
        return pts, valid

    index = {t: i for i, t in enumerate(pts)}
    for i, t in enumerate(pts):
        near = [e for e in elems if e.contains(t)]
        far = [e for e in elems if e.contains(antipode(t))]
        for p in range(len(near)):
            for q in range(p + 1, min(len(near), p + k + 2)):
                valid[(_norm(near[p].id, near[q].id), SAME_SIDE)].add(i)
        both_ranks = sorted(e.rank for e in near if e.contains(antipode(t)))
        far_ids = {e.id for e in far}
        near_ids = {e.id for e in near}
        for p in range(min(len(near), k + 2)):
            a = near[p]
            for q in range(min(len(far), k + 2)):
                b = far[q]
                if a.id == b.id:
                    continue
                shared = bisect_left(both_ranks, min(a.rank, b.rank))
                blockers = p + q - shared
                if a.rank < b.rank and a.id in far_ids:
                    blockers -= 1
                if b.rank < a.rank and b.id in near_ids:
                    blockers -= 1
                if blockers <= k:
                    param = t if a.rank < b.rank else antipode(t)
                    valid[(_norm(a.id, b.id), THROUGH_CENTER)].add(index[param])
    return pts, valid


def _semi_bar_edges(values: list, k: int) -> set[tuple[int, int]]:
    """Pairs (by position) with at most k longer-or-equal values strictly between.

    From each position, the partners it sees as the shorter element are the
    first k+1 values at least as large in each direction.
    """
    n = len(values)
    out = set()
    for s in range(n):
        x = values[s]
        for step in (1, -1):
            seen = 0
            j = s + step
            while 0 <= j < n and seen <= k:
                if values[j] >= x:
                    out.add((s, j) if s < j else (j, s))
                    seen += 1
                j += step
    return out


def _integer_extents(rep: Representation) -> tuple[list[int], int]:
    den = 1
    for e in rep.elements:
        den = lcm(den, e.extent.denominator)
    return [e.extent.numerator * (den // e.extent.denominator) for e in rep.elements], den


def _prefix_sorted(values: list[int]) -> list[list[int]]:
    run: list[int] = []
    out = [[]]
    for x in values:
        insort(run, x)
        out.append(list(run))
    return out


def _at_least(prefix: list[list[int]], i: int, t: int) -> int:
    """Number of the first ``i`` values that are >= t."""
    lst = prefix[i]
    return len(lst) - bisect_left(lst, t)


def semi_arc_center_pairs(ext: list[int], one: int, k: int) -> set[tuple[int, int]]:
    """Through-center pairs (positions, lower first) whose parameter lies on the lower arc.

    Blockers along the sightline at parameter ``f`` are the arcs below the
    lower arc containing ``f`` plus the arcs strictly between containing
    ``f + pi``.  Both counts only shrink as ``f`` grows, so the best
    parameter is the largest admissible one, ``min(e_u, e_v - pi)``.
    Sightlines whose parameter lies on the upper arc never create an edge
    without a same-side sightline as well, so they are not enumerated.
    """
    n = len(ext)
    prefix = _prefix_sorted(ext)
    out = set()
    for u in range(n):
        if _at_least(prefix, u, ext[u]) > k:
            continue
        for v in range(u + 1, n):
            if ext[v] < one:
                continue
            f = min(ext[u], ext[v] - one)
            below = _at_least(prefix, u, f)
            if below > k:
                continue
            mid = _at_least(prefix, v, f + one) - _at_least(prefix, u + 1, f + one)
            if below + mid <= k:
                out.add((u, v))
    return out


def _semi_arc_split(rep: Representation, k: int):
    ext, one = _integer_extents(rep)
    ids = rep.ids()
    same = {_norm(ids[a], ids[b]) for a, b in _semi_bar_edges(ext, k)}
    center = {_norm(ids[a], ids[b]) for a, b in semi_arc_center_pairs(ext, one, k)}
    return same, center


def visibility_graph(rep: Representation, k: int, method: str = "auto") -> Graph:
    """k-visibility graph.  ``method="sweep"`` forces the generic event sweep."""
    if k < 0:
        raise VisError("bad_k", f"k={k}")
    if method == "auto" and rep.kind == "semi_bar":
        lengths = [e.right for e in rep.elements]
        ids = rep.ids()
        return Graph(rep.n, [(ids[a], ids[b]) for a, b in _semi_bar_edges(lengths, k)])
    if method == "auto" and rep.kind == "semi_arc":
        same, center = _semi_arc_split(rep, k)
        return Graph(rep.n, same | center)
    if method not in ("auto", "sweep"):
        raise VisError("bad_method", method)
    _, valid = _sweep(rep, k)
    return Graph(rep.n, {edge for edge, _ in valid})


# -- regions --------------------------------------------------------------------


def _runs(indices: set[int], size: int, cyclic: bool) -> list[tuple[int, int]]:
    if cyclic and len(indices) == size:
        return [(-1, -1)]
    runs = []
    for s in sorted(indices):
        prev = (s - 1) % size if cyclic else s - 1
        if prev in indices:
            continue
        e = s
        while True:
            nxt = (e + 1) % size if cyclic else e + 1
            if nxt in indices and nxt != s:
                e = nxt
            else:
                break
        runs.append((s, e))
    return runs


def _owners(rep: Representation, a, b, family: str, p: Fraction) -> tuple:
    hits = []
    for c in rep.elements:
        if rep.is_arc_kind:
            ends = (c.start, c.end)
            if family == SAME_SIDE:
                on = a.rank <= c.rank <= b.rank and p in ends
            else:
                on = (p in ends and c.rank <= a.rank) or (antipode(p) in ends and c.rank <= b.rank)
        else:
            on = a.rank <= c.rank <= b.rank and p in (c.left, c.right)
        if on:
            hits.append(c.id)
    return tuple(sorted(hits))


def _regions_from(rep, a, b, family, idx: set[int], pts, proper=False) -> list[VisibilityRegion]:
    if proper and family == THROUGH_CENTER:
        idx = {i for i in idx if not a.contains(antipode(pts[i]))}
    edge = _norm(a.id, b.id)
    size = len(pts)
    cyclic = rep.is_arc_kind
    out = []
    for s, e in _runs(idx, size, cyclic):
        if s == -1:
            out.append(VisibilityRegion(edge, family, None, None, full=True))
            continue
        lo = pts[s] if s % 2 == 0 else pts[(s - 1) % size]
        hi = pts[e] if e % 2 == 0 else pts[(e + 1) % size]
        out.append(VisibilityRegion(
            edge, family, lo, hi,
            low_owners=_owners(rep, a, b, family, lo),
            high_owners=_owners(rep, a, b, family, hi),
        ))
    return out


def regions(rep: Representation, u: int, v: int, k: int, proper: bool = False) -> list[VisibilityRegion]:
    """Maximal closed regions of visibility between ``u`` and ``v``, per family.

    With ``proper=True``, through-center sightlines that pass back through
    the lower arc on the far ray are left out.  Such a segment always
    contains a same-side sightline of the same pair, so the graph does not
    change, but the regions become the ones the edge classification uses.
    """
    a, b = _ordered(rep, u, v)
    pts = _eval_points(rep)
    out = []
    for family in _families(rep):
        idx = set(_pair_valid_indices(rep, u, v, k, pts, family))
        out.extend(_regions_from(rep, a, b, family, idx, pts, proper))
    return out


def all_regions(rep: Representation, k: int, proper: bool = False) -> dict[tuple[int, int], list[VisibilityRegion]]:
    pts, valid = _sweep(rep, k)
    out: dict = defaultdict(list)
    for (edge, family) in sorted(valid):
        a, b = _ordered(rep, *edge)
        out[edge].extend(_regions_from(rep, a, b, family, valid[(edge, family)], pts, proper))
    return {e: regs for e, regs in out.items() if regs}


def classify_edges(rep: Representation, k: int) -> EdgeClassification:
    """Assign each proper region's limiting line to the arc whose endpoint it contains.

    The limiting line is the first line of the region met when rotating
    counterclockwise, i.e. the smallest argument once the reference axis is
    placed outside the region.  A through-center region that begins exactly
    where the lower arc's own endpoint leaves the far ray continues a
    same-side region of the same pair on that line; it is recorded with
    sign ``"0"`` and counted in neither multiset.
    """
    if not rep.is_arc_kind:
        raise VisError("unsupported_kind", "limiting lines are defined for arc kinds")
    if not in_general_position(rep, strict=True):
        raise VisError("degenerate_input", "representation is not in general position")
    result = EdgeClassification()
    for edge, regs in sorted(all_regions(rep, k, proper=True).items()):
        for ri, reg in enumerate(regs):
            if reg.full:
                for w in edge:
                    result.negative[w].append(edge)
                    result.assignments.append((edge, reg.family, ri, w, "-"))
                result.flagged.append(edge)
                continue
            owners = reg.low_owners
            if len(owners) != 1:
                raise VisError("degenerate_input", f"limiting line of {edge} meets {owners}")
            w = owners[0]
            if reg.family == THROUGH_CENTER:
                lower, _ = _ordered(rep, *edge)
                if w == lower.id and reg.low not in (lower.start, lower.end):
                    result.assignments.append((edge, reg.family, ri, w, "0"))
                    continue
            sign = "-" if w in edge else "+"
            (result.negative if sign == "-" else result.positive)[w].append(edge)
            result.assignments.append((edge, reg.family, ri, w, sign))
    return result


# -- semi-arc center split ------------------------------------------------------


class CenterSplit(NamedTuple):
    center_only: frozenset
    other: frozenset


def center_split(rep: Representation, k: int, method: str = "auto") -> CenterSplit:
    """Edges seen only through the center versus all remaining edges."""
    if rep.kind != "semi_arc":
        raise VisError("not_semi_arc", rep.kind)
    if method == "auto":
        same, center = _semi_arc_split(rep, k)
    else:
        _, valid = _sweep(rep, k)
        same = {e for e, f in valid if f == SAME_SIDE}
        center = {e for e, f in valid if f == THROUGH_CENTER}
    only = frozenset(center - same)
    return CenterSplit(only, frozenset(same))


def center_edges(rep: Representation, k: int) -> frozenset:
    """Every edge having at least one through-center sightline (generic sweep)."""
    _, valid = _sweep(rep, k)
    return frozenset(e for e, f in valid if f == THROUGH_CENTER)


# -- bar helpers --------------------------------------------------------------


def _require_bars(rep: Representation):
    if rep.kind not in ("bar", "semi_bar"):
        raise VisError("unsupported_kind", f"{rep.kind} is not a bar kind")


def stab_number(rep: Representation) -> int:
    """Most bars met by a single vertical line."""
    _require_bars(rep)
    if not rep.n:
        return 0
    return max(sum(1 for e in rep.elements if e.contains(x)) for x in _eval_points(rep))


def interval_graph_of(rep: Representation) -> Graph:
    _require_bars(rep)
    es = rep.elements
    edges = [
        (a.id, b.id)
        for i, a in enumerate(es) for b in es[i + 1:]
        if a.left <= b.right and b.left <= a.right
    ]
    return Graph(rep.n, edges)
