"""Frozen arc representations found once by :func:`search_representation`.

Coordinates are (start, extent) in units of pi, innermost arc first.  They
are re-verified by the engine every time they are built.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import VisError
from ..geometry import Representation, arcs
from ..graph import Graph
from ..graphtools import are_isomorphic
from ..sightlines import visibility_graph
from .constructions import _verify

F = Fraction

# hill climbing on a 1/24 grid (seed 0, first hit); 0-visibility graph is K_6
K6_CORE = [
    (F(9, 24), F(14, 24)), (F(42, 24), F(6, 24)), (F(0), F(17, 24)),
    (F(23, 24), F(2, 24)), (F(25, 24), F(17, 24)), (F(19, 24), F(39, 24)),
]

# search_representation(C_4, "arc", 0, seed=0)
C4_ARCS = [(F(1), F(5, 16)), (F(1), F(3, 16)), (F(25, 16), F(7, 16)), (F(1, 2), F(1, 2))]

# Tail arcs are full circles minus an open gap of width 4/48 whose left
# end starts at 18/48 and rotates by 3/48 per arc.  A new arc sees the
# previous one, the one before it through the previous gap, and a third
# through the overlap of the last two gaps; three consecutive gaps never
# overlap, so nothing deeper is visible.  Found by scanning (c, w, s) on a
# 1/48 grid; checked up to n = 60, past a full turn of the gap.
TAIL_GAP = (F(18, 48), F(4, 48), F(3, 48))


def _tail_arc(t: int):
    left, width, step = TAIL_GAP
    gap = left + t * step
    return ((gap + width) % 2, 2 - width)


def gen_arc_max(n: int) -> Representation:
    """Arc 0-visibility arrangement with 3n - 3 edges, n >= 6."""
    if n < 6:
        raise VisError("n_too_small", "3n-3 applies from n = 6; use gen_named('K5_arc') below")
    rep = arcs(K6_CORE + [_tail_arc(t) for t in range(n - 6)])
    _verify(rep, 0, 3 * n - 3)
    return rep


_NAMED = {
    "K5_arc": (K6_CORE[:5], Graph.complete(5)),
    "K6_arc": (K6_CORE, Graph.complete(6)),
    "C4_arc": (C4_ARCS, Graph.cycle(4)),
}


def gen_named(name: str) -> Representation:
    if name not in _NAMED:
        raise VisError("unknown_name", f"{name!r}; choose from {sorted(_NAMED)}")
    spec, expected = _NAMED[name]
    rep = arcs(spec)
    if not are_isomorphic(visibility_graph(rep, 0), expected):
        raise VisError("construction_unverified", name)
    return rep
