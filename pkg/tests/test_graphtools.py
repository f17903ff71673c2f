from itertools import combinations
from math import ceil

import networkx as nx
import pytest

from conftest import random_bars, random_graph
from viskit.errors import VisError
from viskit.geometry import semi_arc
from viskit.graph import Graph
from viskit.graphtools import (
    are_isomorphic, arboricity, asteroidal_triple, clique_free, components, cutpoints,
    is_caterpillar_forest, is_chordal, is_forest, is_interval, is_outerhamiltonian,
    is_planar, mcs_order, nash_williams, tensor_product, thickness_bound,
)
from viskit.sightlines import interval_graph_of, visibility_graph


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + inner + [(i, i + 5) for i in range(5)])


def subdivided_claw() -> Graph:
    return Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def fan(n: int) -> Graph:
    return Graph(n, [(0, i) for i in range(1, n)] + [(i, i + 1) for i in range(1, n - 1)])


def interval_oracle(g: Graph) -> bool:
    """Maximal cliques admit an order in which every vertex's cliques are consecutive."""
    cliques = [frozenset(c) for c in nx.find_cliques(g.to_networkx())] if g.n else []

    def extend(used, state):
        if len(used) == len(cliques):
            return True
        for i, c in enumerate(cliques):
            if i in used:
                continue
            if any(state.get(v) == "closed" for v in c):
                continue
            nxt = dict(state)
            for v, s in state.items():
                if s == "open" and v not in c:
                    nxt[v] = "closed"
            for v in c:
                nxt[v] = "open"
            if extend(used | {i}, nxt):
                return True
        return False

    return extend(frozenset(), {})


def nw_oracle(g: Graph) -> int:
    best = 0
    for size in range(2, g.n + 1):
        for sub in combinations(range(g.n), size):
            s = set(sub)
            e = sum(1 for u, v in g.edges if u in s and v in s)
            best = max(best, ceil(e / (size - 1)))
    return best


def test_planarity_examples():
    assert is_planar(Graph.complete(4))
    assert not is_planar(Graph.complete(5))
    assert not is_planar(Graph(6, [(a, b) for a in range(3) for b in range(3, 6)]))


def test_chordal_examples():
    assert not is_chordal(Graph.cycle(4))
    assert is_chordal(Graph.star(6)) and is_chordal(Graph.path(7))
    assert is_chordal(Graph.complete(6))


def test_mcs_order_is_permutation():
    g = petersen()
    assert sorted(mcs_order(g)) == list(range(10))


def test_chordal_matches_networkx(rng):
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        assert is_chordal(g) == nx.is_chordal(g.to_networkx())


def test_interval_examples():
    assert not is_interval(Graph.cycle(4))
    assert is_interval(Graph.path(6))
    assert not is_interval(subdivided_claw())
    assert asteroidal_triple(subdivided_claw()) is not None


def test_interval_matches_clique_oracle(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        got = is_interval(g)
        assert got == interval_oracle(g)
        if got:
            assert is_chordal(g)


def test_interval_graphs_of_bars(rng):
    for _ in range(40):
        assert is_interval(interval_graph_of(random_bars(rng, rng.randint(1, 10))))


def test_caterpillar_examples():
    assert is_caterpillar_forest(Graph.star(6))
    assert not is_caterpillar_forest(Graph.cycle(6))
    assert not is_caterpillar_forest(subdivided_claw())
    assert is_caterpillar_forest(Graph.empty(3))
    assert is_caterpillar_forest(Graph(7, [(0, 1), (1, 2), (1, 3), (4, 5), (5, 6)]))


def test_clique_free():
    assert clique_free(Graph.cycle(4), 3)
    assert not clique_free(Graph.complete(5), 5)
    assert not clique_free(Graph.complete(2), 2)
    for j in range(1, 5):
        assert clique_free(tensor_product(Graph.complete(j), Graph.cycle(4)), j + 3)
    with pytest.raises(VisError):
        clique_free(Graph.cycle(4), 1)


def test_cutpoints():
    assert cutpoints(Graph.path(3)) == {1}
    assert cutpoints(Graph.cycle(4)) == set()


def test_cutpoints_match_networkx(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 12), rng.random() * 0.5)
        assert cutpoints(g) == set(nx.articulation_points(g.to_networkx()))


def test_components():
    assert components(Graph(5, [(0, 3), (1, 4)])) == [[0, 3], [1, 4], [2]]


def test_isomorphism_examples():
    assert not are_isomorphic(Graph.cycle(4), Graph.star(3))
    assert are_isomorphic(Graph.complete(5), Graph.complete(5))
    p = petersen()
    perm = [3, 7, 1, 9, 0, 5, 2, 8, 4, 6]
    assert are_isomorphic(p, p.relabel(perm))
    with pytest.raises(VisError):
        are_isomorphic(Graph.empty(11), Graph.empty(11))


def test_isomorphism_matches_networkx(rng):
    for _ in range(100):
        n = rng.randint(1, 7)
        g, h = random_graph(rng, n, 0.5), random_graph(rng, n, 0.5)
        assert are_isomorphic(g, h) == nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def test_tensor_product():
    k2 = Graph.complete(2)
    # (a, b) is vertex 2a + b
    assert tensor_product(k2, k2) == Graph(4, [(0, 3), (1, 2)])
    # C_4 is bipartite, so its product with K_2 is two disjoint copies of it
    two_c4 = Graph(8, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)])
    assert are_isomorphic(tensor_product(k2, Graph.cycle(4)), two_c4)
    assert are_isomorphic(tensor_product(k2, Graph.cycle(5)), Graph.cycle(10))
    assert tensor_product(Graph.complete(1), Graph.cycle(4)).m == 0


@pytest.mark.parametrize("j", [2, 3, 4])
def test_tensor_has_induced_four_cycle(j):
    g = tensor_product(Graph.complete(j), Graph.cycle(4))
    assert any(
        sub.m == 4 and all(d == 2 for d in sub.degrees())
        for sub in (g.induced(q) for q in combinations(range(g.n), 4))
    )


def test_outerhamiltonian():
    assert is_outerhamiltonian(Graph.path(5)) is not None
    assert is_outerhamiltonian(Graph.complete(5)) is None
    w = is_outerhamiltonian(fan(6))
    assert w is not None and sorted(w) == list(range(6))
    with pytest.raises(VisError):
        is_outerhamiltonian(Graph.path(11))


def test_outerhamiltonian_implies_planar(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 7), rng.random())
        if is_outerhamiltonian(g) is not None:
            assert is_planar(g)


def test_arboricity_examples():
    assert arboricity(Graph.complete(5))[0] == 3
    assert arboricity(Graph.path(9))[0] == 1
    for n in range(3, 9):
        assert arboricity(Graph.cycle(n))[0] == 2
    assert arboricity(Graph.empty(4))[0] == 0


def test_arboricity_partition_and_certificate(rng):
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        value, parts = arboricity(g)
        assert value == len(parts) == nw_oracle(g) == nash_williams(g)
        edges = [e for p in parts for e in p.edges]
        assert len(edges) == len(set(edges)) and set(edges) == set(g.edges)
        assert all(is_forest(p) for p in parts)


def test_planar_arboricity_at_most_three(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 12), rng.random())
        if is_planar(g):
            assert arboricity(g)[0] <= 3


def test_thickness_bound():
    assert thickness_bound(Graph.path(4)) == 1
    k7 = Graph.complete(7)
    assert thickness_bound(k7, ("arc", 0)) == 3
    assert thickness_bound(k7, ("semi_arc", 1)) == 3
    assert thickness_bound(k7) == 4
    g = visibility_graph(semi_arc([1, 2]), 0)
    assert thickness_bound(g, ("semi_bar", 0)) == 1
