"""Graph predicates and algorithms on :class:`Graph`."""
from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Optional, Sequence

import networkx as nx

from .errors import VisError
from .graph import Graph, _norm

ISO_LIMIT = 10
OUTER_LIMIT = 10


def is_planar(g: Graph) -> bool:
    planar, _ = nx.check_planarity(g.to_networkx())
    return planar


# -- chordal / interval -------------------------------------------------------------


def mcs_order(g: Graph) -> list[int]:
    """Maximum-cardinality search; the reverse is a perfect elimination order iff g is chordal."""
    adj = g.adjacency()
    weight = [0] * g.n
    done = [False] * g.n
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not done[u]), key=lambda u: (weight[u], -u))
        done[v] = True
        order.append(v)
        for w in adj[v]:
            if not done[w]:
                weight[w] += 1
    return order


def is_chordal(g: Graph) -> bool:
    adj = g.adjacency()
    order = mcs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [w for w in adj[v] if pos[w] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=pos.__getitem__)
        if any(w != parent and w not in adj[parent] for w in earlier):
            return False
    return True


def _components_avoiding(adj, n, removed: set[int]) -> list[int]:
    comp = [-1] * n
    label = 0
    for s in range(n):
        if s in removed or comp[s] >= 0:
            continue
        comp[s] = label
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in removed and comp[y] < 0:
                    comp[y] = label
                    stack.append(y)
        label += 1
    return comp


def asteroidal_triple(g: Graph) -> Optional[tuple[int, int, int]]:
    """Three pairwise non-adjacent vertices, each pair joined by a path avoiding the third's neighbourhood."""
    adj = g.adjacency()
    comp = [_components_avoiding(adj, g.n, adj[z] | {z}) for z in range(g.n)]
    for x, y, z in combinations(range(g.n), 3):
        if y in adj[x] or z in adj[x] or z in adj[y]:
            continue
        if (comp[z][x] == comp[z][y] and comp[y][x] == comp[y][z]
                and comp[x][y] == comp[x][z]):
            return (x, y, z)
    return None


def is_interval(g: Graph) -> bool:
    """Chordal and free of asteroidal triples (Lekkerkerker-Boland)."""
    return is_chordal(g) and asteroidal_triple(g) is None


# -- trees and friends --------------------------------------------------------------


def components(g: Graph) -> list[list[int]]:
    comp = _components_avoiding(g.adjacency(), g.n, set())
    groups: dict[int, list[int]] = {}
    for v, c in enumerate(comp):
        groups.setdefault(c, []).append(v)
    return [groups[c] for c in sorted(groups)]


def is_caterpillar_forest(g: Graph) -> bool:
    adj = g.adjacency()
    for comp in components(g):
        cset = set(comp)
        edges = sum(len(adj[v]) for v in comp) // 2
        if edges != len(comp) - 1:
            return False
        spine = [v for v in comp if len(adj[v]) > 1]
        sset = set(spine)
        # the spine of a tree is connected; it is a path iff degrees stay <= 2
        if any(len(adj[v] & sset) > 2 for v in spine):
            return False
        assert sset <= cset
    return True


def clique_free(g: Graph, size: int) -> bool:
    """True iff ``g`` has no clique on ``size`` vertices."""
    if size < 2:
        raise VisError("bad_size", f"clique size {size} < 2")
    adj = g.adjacency()

    def grow(clique_len: int, cand: set[int]) -> bool:
        if clique_len == size:
            return True
        if clique_len + len(cand) < size:
            return False
        for v in sorted(cand):
            if grow(clique_len + 1, cand & {w for w in adj[v] if w > v}):
                return True
        return False

    return not grow(0, set(range(g.n)))


def cutpoints(g: Graph) -> set[int]:
    """Articulation points (iterative Hopcroft-Tarjan)."""
    adj = [sorted(a) for a in g.adjacency()]
    disc = [-1] * g.n
    low = [0] * g.n
    out = set()
    clock = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        children = 0
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if parent != root and low[v] >= disc[parent]:
                        out.add(parent)
                continue
            if nxt == parent:
                continue
            if disc[nxt] >= 0:
                low[v] = min(low[v], disc[nxt])
            else:
                disc[nxt] = low[nxt] = clock
                clock += 1
                if v == root:
                    children += 1
                stack.append((nxt, v, iter(adj[nxt])))
        if children > 1:
            out.add(root)
    return out


# -- isomorphism --------------------------------------------------------------------


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if max(g.n, h.n) > ISO_LIMIT:
        raise VisError("too_large", f"isomorphism limited to {ISO_LIMIT} vertices")
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    ga, ha = g.adjacency(), h.adjacency()
    gd, hd = g.degrees(), h.degrees()
    order = sorted(range(g.n), key=lambda v: -gd[v])
    image: dict[int, int] = {}
    used = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in range(h.n):
            if w in used or hd[w] != gd[v]:
                continue
            if all((image[x] in ha[w]) == (x in ga[v]) for x in image):
                image[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del image[v]
                used.discard(w)
        return False

    return extend(0)


def tensor_product(g: Graph, h: Graph) -> Graph:
    """Vertex (a, b) is numbered ``a * h.n + b``."""
    edges = []
    for a, c in g.edges:
        for b, d in h.edges:
            edges.append((a * h.n + b, c * h.n + d))
            edges.append((a * h.n + d, c * h.n + b))
    return Graph(g.n * h.n, edges)


# -- outerhamiltonicity -------------------------------------------------------------


def _face_order_planar(g: Graph, order: Sequence[int], closed: bool) -> bool:
    nxg = g.to_networkx()
    apex = g.n
    nxg.add_node(apex)
    for v in order:
        nxg.add_edge(apex, v)
    if closed and len(order) > 2:
        nxg.add_edge(order[-1], order[0])
    planar, _ = nx.check_planarity(nxg)
    return planar


def is_outerhamiltonian(g: Graph, strict: bool = True) -> Optional[list[int]]:
    """A hamiltonian path of ``g`` whose vertices lie on one face, or ``None``.

    In the strict sense the path order must also be the order around that
    face; otherwise it suffices that every vertex is on the outer face.
    """
    if g.n > OUTER_LIMIT:
        raise VisError("too_large", f"outerhamiltonian search limited to {OUTER_LIMIT} vertices")
    if g.n <= 1:
        return list(range(g.n))
    if not is_planar(g):
        return None
    if not strict and not _face_order_planar(g, range(g.n), closed=False):
        return None
    adj = [sorted(a) for a in g.adjacency()]
    path: list[int] = []
    seen = [False] * g.n

    def dfs(v: int) -> Optional[list[int]]:
        path.append(v)
        seen[v] = True
        if len(path) == g.n:
            if path[0] < path[-1] and (not strict or _face_order_planar(g, path, closed=True)):
                return list(path)
        else:
            for w in adj[v]:
                if not seen[w]:
                    found = dfs(w)
                    if found:
                        return found
        path.pop()
        seen[v] = False
        return None

    for s in range(g.n):
        found = dfs(s)
        if found:
            return found
    return None


# -- arboricity ---------------------------------------------------------------------


class _Forest:
    def __init__(self, n: int):
        self.adj: list[set[int]] = [set() for _ in range(n)]

    def add(self, e):
        u, v = e
        self.adj[u].add(v)
        self.adj[v].add(u)

    def remove(self, e):
        u, v = e
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def path(self, s: int, t: int) -> Optional[list[tuple[int, int]]]:
        """Edges on the forest path from s to t, or None if disconnected."""
        prev = {s: None}
        todo = deque([s])
        while todo:
            x = todo.popleft()
            if x == t:
                break
            for y in self.adj[x]:
                if y not in prev:
                    prev[y] = x
                    todo.append(y)
        if t not in prev:
            return None
        out = []
        while prev[t] is not None:
            out.append(_norm(t, prev[t]))
            t = prev[t]
        return out

    def edges(self):
        return {_norm(u, v) for u in range(len(self.adj)) for v in self.adj[u] if u < v}


def _insert(forests: list[_Forest], owner: dict, e) -> bool:
    """Augment along a shortest exchange path so that ``e`` fits; False if impossible."""
    label = {e: None}
    todo = deque([e])
    while todo:
        x = todo.popleft()
        for i, f in enumerate(forests):
            if owner.get(x) == i:
                continue
            cyc = f.path(*x)
            if cyc is None:
                # x goes into forest i; unwind the exchanges
                cur, target = x, i
                while cur is not None:
                    src = owner.get(cur)
                    if src is not None:
                        forests[src].remove(cur)
                    forests[target].add(cur)
                    owner[cur] = target
                    back = label[cur]
                    if back is None:
                        break
                    cur, target = back, src
                return True
            for y in cyc:
                if y not in label:
                    label[y] = x
                    todo.append(y)
    return False


def arboricity(g: Graph) -> tuple[int, list[Graph]]:
    """Exact arboricity with a witnessing partition into forests (matroid partition)."""
    forests: list[_Forest] = []
    owner: dict = {}
    for e in g.sorted_edges():
        if not _insert(forests, owner, e):
            forests.append(_Forest(g.n))
            forests[-1].add(e)
            owner[e] = len(forests) - 1
    parts = [Graph(g.n, f.edges()) for f in forests]
    return len(parts), parts


def nash_williams(g: Graph) -> int:
    """max over vertex subsets of ceil(E_H / (N_H - 1)); exponential, for checking."""
    best = 0
    adj = g.adjacency()
    for size in range(2, g.n + 1):
        for vs in combinations(range(g.n), size):
            s = set(vs)
            e = sum(len(adj[v] & s) for v in vs) // 2
            best = max(best, -(-e // (size - 1)))
    return best


def is_forest(g: Graph) -> bool:
    return all(
        sum(len(g.adjacency()[v]) for v in comp) // 2 == len(comp) - 1
        for comp in components(g)
    )


CLASS_THICKNESS = {
    "bar": lambda k: 3 * k + 3,
    "semi_bar": lambda k: max(2 * k, 1),
    "arc": lambda k: 3 * k + 3,
    "semi_arc": lambda k: 2 * k + 1,
}


def thickness_bound(g: Graph, class_hint: Optional[tuple[str, int]] = None) -> int:
    """Upper bound on thickness: arboricity, capped by the class bound when known."""
    arb, _ = arboricity(g)
    if class_hint is None:
        return arb
    kind, k = class_hint
    if kind not in CLASS_THICKNESS:
        raise VisError("unsupported_kind", kind)
    return min(arb, CLASS_THICKNESS[kind](k))
