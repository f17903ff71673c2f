"""Semi-arc 0-visibility graphs as a semi-bar graph plus a diagonal graph.

The record arcs ``b_1 .. b_m`` are the strict prefix maxima of the extents
from the innermost arc outwards, ending at the first arc of greatest
extent.  Through the center, only pairs of record arcs can see each other
without also seeing each other on one side, and whether two record arcs
do depends on the record extents alone.  Writing ``x_i`` for the extent of
``b_i`` and ``y_l = x_l - 1`` (units of pi), ``b_i`` sees ``b_l`` (i < l)
through the center iff

    y_l >= 0,  (i = 1 or y_l > x_{i-1}),  (l = i+1 or y_{l-1} < x_i).

Rebuilding a representation from a witness amounts to choosing how the
sequences ``x_1 < .. < x_{j-1}`` and ``y_j < .. < y_m`` interleave.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..errors import VisError
from ..geometry import ONE, Representation, semi_arc, semi_bar
from ..graph import Graph, _norm
from ..graphtools import cutpoints
from ..sightlines import _semi_bar_edges, center_edges, visibility_graph


@dataclass(frozen=True)
class DiagonalSpec:
    b_sequence: tuple = ()
    j: int = 0
    edges: frozenset = field(default_factory=frozenset)

    def index_edges(self) -> set[tuple[int, int]]:
        """Edges as 1-based index pairs (low, high)."""
        pos = {b: i + 1 for i, b in enumerate(self.b_sequence)}
        out = set()
        for u, v in self.edges:
            if u not in pos or v not in pos or u == v:
                raise VisError("bad_index", f"edge ({u}, {v}) leaves the b-sequence")
            out.add(tuple(sorted((pos[u], pos[v]))))
        return out


@dataclass(frozen=True)
class CharacterizationWitness:
    semibar_rep: Representation
    diagonal: DiagonalSpec


def is_diagonal_graph(spec: DiagonalSpec) -> bool:
    """Check the three diagonal-graph axioms on index pairs.

    1. if j >= 2: b_1 ~ b_j and b_1 is adjacent to no b_i with 1 < i < j;
    2. the higher-index neighbours of every b_i are consecutive, and so are
       the lower-index ones;
    3. for 1 <= i < j with a higher neighbour, let K be the highest; then
       b_{i+1} has no neighbour strictly between i+1 and K, and its lowest
       higher neighbour, if any, is b_K or b_{K+1}.
    """
    m = len(spec.b_sequence)
    if m == 0:
        if spec.edges:
            raise VisError("bad_index", "edges without a b-sequence")
        return True
    if not 1 <= spec.j <= m:
        raise VisError("bad_index", f"j={spec.j} outside 1..{m}")
    if len(set(spec.b_sequence)) != m:
        raise VisError("bad_index", "repeated vertex in b-sequence")
    edges = spec.index_edges()
    up = {i: sorted(l for a, l in edges if a == i) for i in range(1, m + 1)}
    down = {i: sorted(a for a, l in edges if l == i) for i in range(1, m + 1)}
    j = spec.j
    if j >= 2:
        if j not in up[1] or any(l < j for l in up[1]):
            return False
    for i in range(1, m + 1):
        for side in (up[i], down[i]):
            if side and side[-1] - side[0] + 1 != len(side):
                return False
    for i in range(1, j):
        if not up[i] or i + 1 > m:
            continue
        top = up[i][-1]
        higher = up[i + 1]
        if any(i + 1 < l < top for l in higher):
            return False
        if higher and higher[0] not in (top, top + 1):
            return False
    return True


def record_positions(values: list) -> list[int]:
    """Strict prefix maxima up to the first occurrence of the overall maximum."""
    out: list[int] = []
    if not values:
        return out
    top = max(values)
    best = None
    for p, x in enumerate(values):
        if best is None or x > best:
            out.append(p)
            best = x
            if x == top:
                break
    return out


def center_partners(x: list, j: int) -> set[tuple[int, int]]:
    """Index pairs (1-based) of record arcs seeing each other through the center."""
    m = len(x)
    out = set()
    for i in range(1, m + 1):
        for l in range(i + 1, m + 1):
            y_l = x[l - 1] - 1
            if y_l < 0:
                continue
            if i > 1 and not y_l > x[i - 2]:
                continue
            if l > i + 1 and not x[l - 2] - 1 < x[i - 1]:
                continue
            out.add((i, l))
    return out


def _semibar_graph(lengths: list, ids: list[int]) -> Graph:
    return Graph(len(ids), [(ids[a], ids[b]) for a, b in _semi_bar_edges(lengths, 0)])


def extract_witness(rep: Representation, k: int = 0) -> CharacterizationWitness:
    """Split a semi-arc representation into its semi-bar part and diagonal graph."""
    if rep.kind != "semi_arc":
        raise VisError("not_semi_arc", rep.kind)
    if k != 0:
        raise VisError("unsupported_k", "the characterization covers k = 0")
    ext = [e.extent for e in rep.elements]
    ids = rep.ids()
    ranks = [e.rank for e in rep.elements]
    sb = semi_bar(ext).with_ids(ids, ranks)
    if not ext or max(ext) < ONE:
        return CharacterizationWitness(sb, DiagonalSpec())
    pos = record_positions(ext)
    b_ids = tuple(ids[p] for p in pos)
    x = [ext[p] for p in pos]
    j = next(i for i, v in enumerate(x, 1) if v >= ONE)
    through = center_edges(rep, 0)
    bset = set(b_ids)
    diag = frozenset(e for e in through if e[0] in bset and e[1] in bset)
    spec = DiagonalSpec(b_ids, j, diag)
    # the closed form must agree with the sweep
    expected = {_norm(b_ids[i - 1], b_ids[l - 1]) for i, l in center_partners(x, j)}
    assert expected == set(diag), (expected, diag)
    assert is_diagonal_graph(spec), spec
    graph = visibility_graph(rep, 0)
    assert _semibar_graph(ext, ids).union(Graph(rep.n, diag)) == graph
    return CharacterizationWitness(sb, spec)


# -- rebuilding ---------------------------------------------------------------------


def _merges(a: int, b: int):
    """Weak interleavings of two strictly increasing sequences of lengths a and b.

    Yields lists of levels, each level a pair (x index or None, y index or None).
    """
    if a == 0 and b == 0:
        yield []
        return
    if a:
        for rest in _merges(a - 1, b):
            yield rest + [(a, None)]
    if b:
        for rest in _merges(a, b - 1):
            yield rest + [(None, b)]
    if a and b:
        for rest in _merges(a - 1, b - 1):
            yield rest + [(a, b)]


def _solve_records(m: int, j: int, target: set) -> Optional[list[Fraction]]:
    """Record extents x_1 < .. < x_m with x_{j-1} < 1 <= x_j realizing ``target``."""
    nx_, ny = j - 1, m - j + 1
    for levels in _merges(nx_, ny):
        # y_j = 0 puts b_j exactly at pi; it needs a level of its own at the bottom
        for zero in (True, False):
            if zero and levels[0] != (None, 1):
                continue
            vals = {}
            rest = levels[1:] if zero else levels
            width = len(rest) + 1
            if zero:
                vals[("y", 1)] = Fraction(0)
            for idx, (xi, yi) in enumerate(rest, 1):
                v = Fraction(idx, width)
                if xi:
                    vals[("x", xi)] = v
                if yi:
                    vals[("y", yi)] = v
            x = [vals[("x", i)] for i in range(1, j)] + [1 + vals[("y", l)] for l in range(1, ny + 1)]
            if center_partners(x, j) == target:
                return x
    return None


def build_from_witness(w: CharacterizationWitness) -> Representation:
    """A semi-arc representation whose 0-visibility graph is the semi-bar graph plus the diagonal."""
    sb = w.semibar_rep
    spec = w.diagonal
    if sb.kind != "semi_bar":
        raise VisError("witness_invalid", "semibar_rep must be a semi_bar representation")
    ids = sb.ids()
    ranks = [e.rank for e in sb.elements]
    lengths = [e.right for e in sb.elements]
    sb_graph = _semibar_graph(lengths, ids)
    try:
        diagonal_ok = is_diagonal_graph(spec)
    except VisError as exc:
        raise VisError("witness_invalid", exc.detail) from None
    if not diagonal_ok:
        raise VisError("witness_invalid", "diagonal axioms fail")
    target_graph = sb_graph.union(Graph(sb.n, spec.edges))
    m = len(spec.b_sequence)
    if m:
        rank_pos = {b: p for p, b in enumerate(ids)}
        b_pos = [rank_pos.get(b) for b in spec.b_sequence]
        if None in b_pos or b_pos != sorted(b_pos):
            raise VisError("witness_invalid", "b-sequence must follow the path order")
        cut = cutpoints(sb_graph) | {ids[0], ids[-1]}
        if not set(spec.b_sequence) <= cut:
            raise VisError("witness_invalid", "b-sequence must consist of cutpoints")
        if record_positions(lengths) != b_pos:
            lengths = _relengthen(lengths, b_pos, sb_graph, ids)
        target = spec.index_edges()
        x = _solve_records(m, spec.j, target)
        if x is None:
            raise VisError("witness_invalid", "no record extents realize this diagonal graph")
        new = _place(lengths, b_pos, x)
    else:
        new = _place(lengths, [], [])
    rep = semi_arc(new).with_ids(ids, ranks)
    got = visibility_graph(rep, 0)
    if got != target_graph:
        raise VisError("roundtrip_failed", f"rebuilt graph differs on {set(got.edges) ^ set(target_graph.edges)}")
    return rep


def _relengthen(lengths, b_pos, sb_graph, ids):
    """Raise the selected bars into strictly increasing records.

    Non-selected bars between b_i and b_{i+1} that were as tall as the
    cutpoint bars take b_i's new length; everything else keeps its length.
    """
    top = max(lengths)
    if any(lengths[p] != top for p in b_pos) or b_pos[0] != 0:
        raise VisError("witness_invalid", "selected bars are neither records nor all of maximal length")
    new = list(lengths)
    for i, p in enumerate(b_pos):
        end = b_pos[i + 1] if i + 1 < len(b_pos) else len(lengths)
        new[p] = top + i + 1
        for q in range(p + 1, end):
            if lengths[q] == top:
                new[q] = top + i + 1
    if record_positions(new) != b_pos or _semibar_graph(new, ids) != sb_graph:
        raise VisError("witness_invalid", "re-lengthening changes the semi-bar graph")
    return new


def _place(lengths: list, b_pos: list[int], x: list[Fraction]) -> list[Fraction]:
    """Order-preserving map of lengths onto extents, sending record levels to ``x``."""
    levels = sorted(set(lengths))
    anchor = {lengths[p]: v for p, v in zip(b_pos, x)}
    if not anchor:
        # everything below pi
        return [Fraction(levels.index(v) + 1, len(levels) + 1) for v in lengths]
    out_level = {}
    pending: list = []
    prev = Fraction(0)
    for v in levels:
        if v in anchor:
            a = anchor[v]
            for t, pv in enumerate(pending, 1):
                out_level[pv] = prev + (a - prev) * t / (len(pending) + 1)
            out_level[v] = a
            prev = a
            pending = []
        else:
            pending.append(v)
    # record b_m holds the largest length, so nothing is left above it
    assert not pending
    return [out_level[v] for v in lengths]
