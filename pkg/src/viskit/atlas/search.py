"""Small-n representation search (an oracle for figure-only constructions).

A ``None`` result only means the budget ran out; it proves nothing.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import islice, permutations
from typing import Optional

from ..errors import VisError
from ..geometry import Representation, arcs, bars, semi_arc, semi_bar
from ..graph import Graph
from ..graphtools import are_isomorphic
from ..sightlines import visibility_graph

SEARCH_LIMIT = 8


def _matches(rep: Representation, k: int, target: Graph) -> bool:
    g = visibility_graph(rep, k)
    return g.m == target.m and are_isomorphic(g, target)


def _score(rep: Representation, k: int, target: Graph) -> int:
    g = visibility_graph(rep, k)
    a, b = sorted(g.degrees()), sorted(target.degrees())
    return abs(g.m - target.m) + sum(abs(x - y) for x, y in zip(a, b))


def _semi_candidates(kind: str, n: int):
    if kind == "semi_bar":
        for perm in permutations(range(1, n + 1)):
            yield semi_bar(perm)
        return
    # two generic grids: one entirely below pi, one straddling it
    shrink = Fraction((1 << 20) - 1, 1 << 20)
    grids = [
        [Fraction(2 * i - 1, n) * shrink for i in range(1, n + 1)],
        [Fraction(i, n + 1) for i in range(1, n + 1)],
    ]
    for grid in grids:
        for perm in permutations(range(n)):
            yield semi_arc([grid[p] for p in perm])


def _random_element(kind: str, n: int, rng: random.Random):
    if kind == "arc":
        den = 4 * n
        return (Fraction(rng.randrange(2 * den), den), Fraction(rng.randint(1, 2 * den - 1), den))
    a, b = sorted(rng.sample(range(2 * n + 2), 2))
    return (Fraction(a), Fraction(b))


def _build(kind: str, spec) -> Representation:
    return arcs(spec) if kind == "arc" else bars(spec)


def search_representation(target: Graph, kind: str, k: int, budget: int = 20000,
                          seed: int = 0) -> Optional[Representation]:
    """Engine-verified representation whose k-visibility graph is isomorphic to ``target``."""
    n = target.n
    if n > SEARCH_LIMIT:
        raise VisError("too_large", f"search limited to n <= {SEARCH_LIMIT}")
    if kind in ("semi_bar", "semi_arc"):
        for rep in islice(_semi_candidates(kind, n), budget):
            if _matches(rep, k, target):
                return rep
        return None
    if kind not in ("arc", "bar"):
        raise VisError("unknown_kind", kind)
    rng = random.Random(seed)
    spent = 0
    # hill climbing on a degree-sequence distance, with restarts
    while spent < budget:
        cur = [_random_element(kind, n, rng) for _ in range(n)]
        rep = _build(kind, cur)
        score = _score(rep, k, target)
        spent += 1
        stall = 0
        while spent < budget and stall < 50 * n:
            if score == 0 and _matches(rep, k, target):
                return rep
            nxt = list(cur)
            nxt[rng.randrange(n)] = _random_element(kind, n, rng)
            if rng.random() < 0.3:
                a, b = rng.randrange(n), rng.randrange(n)
                nxt[a], nxt[b] = nxt[b], nxt[a]
            cand = _build(kind, nxt)
            s = _score(cand, k, target)
            spent += 1
            if s <= score:
                stall = stall + 1 if s == score else 0
                cur, rep, score = nxt, cand, s
            else:
                stall += 1
        if score == 0 and _matches(rep, k, target):
            return rep
    return None
