from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

from viskit.bounds import max_edges
from viskit.geometry import Arc, Representation, angle, antipode, arcs, bars, semi_arc, semi_bar
from viskit.graph import Graph
from viskit.graphtools import arboricity, is_forest, is_interval, is_planar
from viskit.shell import emit_representation, parse_representation
from viskit.sightlines import interval_graph_of, stab_number, visibility_graph

angles = st.fractions(min_value=-4, max_value=4, max_denominator=48)
extents = st.fractions(min_value=0, max_value=2, max_denominator=48).filter(lambda x: 0 < x < 2)
small_k = st.integers(0, 3)


@st.composite
def semi_arcs(draw, max_n=12):
    return semi_arc(draw(st.lists(extents, min_size=1, max_size=max_n)))


@st.composite
def arc_reps(draw, max_n=9):
    return arcs(draw(st.lists(st.tuples(angles, extents), min_size=1, max_size=max_n)))


@st.composite
def bar_reps(draw, max_n=10):
    spec = draw(st.lists(st.tuples(st.integers(0, 20), st.integers(1, 8)), min_size=1, max_size=max_n))
    return bars([(a, a + w) for a, w in spec])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, [p for p in pairs if draw(st.booleans())])


@given(angles)
def test_antipode_involution(a):
    assert antipode(antipode(a)) == angle(a)
    assert 0 <= angle(a) < 2


@given(st.one_of(semi_arcs(), arc_reps(), bar_reps()))
def test_parse_emit_identity(rep):
    text = emit_representation(rep)
    assert parse_representation(text) == rep
    assert emit_representation(parse_representation(text)) == text


@settings(max_examples=60, deadline=None)
@given(arc_reps(), small_k)
def test_monotone_in_k(rep, k):
    assert visibility_graph(rep, k).edges <= visibility_graph(rep, k + 1).edges


@settings(max_examples=80, deadline=None)
@given(semi_arcs(max_n=16))
def test_semi_arc_planar(rep):
    assert is_planar(visibility_graph(rep, 0))


@settings(max_examples=60, deadline=None)
@given(semi_arcs(), small_k)
def test_semi_fast_path_matches_sweep(rep, k):
    assert visibility_graph(rep, k) == visibility_graph(rep, k, method="sweep")
    sb = semi_bar([e.extent for e in rep.elements])
    assert visibility_graph(sb, k) == visibility_graph(sb, k, method="sweep")


@settings(max_examples=60, deadline=None)
@given(semi_arcs(max_n=14), small_k)
def test_semi_arc_edge_bound(rep, k):
    assert visibility_graph(rep, k).m <= max_edges("semi_arc", rep.n, k).value


@settings(max_examples=60, deadline=None)
@given(arc_reps(), small_k)
def test_arc_edge_bound(rep, k):
    assert visibility_graph(rep, k).m <= max_edges("arc", rep.n, k).value


@settings(max_examples=60, deadline=None)
@given(bar_reps(), small_k)
def test_bar_interval_properties(rep, k):
    g = visibility_graph(rep, k)
    ig = interval_graph_of(rep)
    assert g.edges <= ig.edges and is_interval(ig)
    if stab_number(rep) <= k + 2:
        assert g == ig


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_arboricity_partition(g):
    value, parts = arboricity(g)
    assert len(parts) == value
    assert sorted(e for p in parts for e in p.edges) == g.sorted_edges()
    assert all(is_forest(p) for p in parts)


@given(st.lists(st.integers(1, 30), min_size=1, max_size=10))
def test_semi_bar_rank_invariance(lengths):
    ranked = [sorted(set(lengths)).index(x) + 1 for x in lengths]
    assert visibility_graph(semi_bar(lengths), 1) == visibility_graph(semi_bar(ranked), 1)


def test_arc_constructor_reduces_start():
    assert Representation("arc", (Arc(0, 1, F(7, 2), F(1, 2)),)).elements[0].start == F(3, 2)
