"""Simple undirected graphs on vertices ``0..n-1``."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import networkx as nx

from .errors import VisError


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        es = set()
        for u, v in edges:
            if u == v:
                raise VisError("loop", f"({u}, {v})")
            if not (0 <= u < n and 0 <= v < n):
                raise VisError("bad_vertex", f"edge ({u}, {v}) outside 0..{n - 1}")
            es.add(_norm(u, v))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(es))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency()]

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to 0..|S|-1 in sorted order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos])

    def relabel(self, perm: list[int]) -> "Graph":
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def union(self, other: "Graph") -> "Graph":
        return Graph(max(self.n, other.n), self.edges | other.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)
