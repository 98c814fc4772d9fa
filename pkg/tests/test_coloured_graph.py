import pytest
from hypothesis import given, settings, strategies as st

from edgeswitch.coloured_graph import (
    EdgeColouredGraph,
    GraphError,
    abelianize_graph,
    cycle_graph,
    k2,
    parse_graph,
    serialize_graph,
    spanning_forest,
    structure,
)
from edgeswitch.perm_groups import block_system

from support import d4, s3, z4


def test_parse_examples():
    assert parse_graph("ecg 2 2\n0 1 1") == k2(1, 2)
    g = parse_graph("ecg 2 4\n0 1 1\n1 2 1\n2 3 1\n3 0 2")
    assert g == cycle_graph([1, 1, 1, 2], 2)
    assert g.colour(0, 3) == 2 and g.colour(3, 0) == 2


@pytest.mark.parametrize("text, message", [
    ("ecg 2 3\n0 0 1", "line 2: loop"),
    ("ecg 2 3\n0 1 1\n# note\n1 0 2", "line 4: duplicate"),
    ("ecg 2 3\n0 1 3", "line 2: colour 3"),
    ("ecg 2 3\n0 1", "line 2"),
    ("ecg 2 3\n0 5 1", "line 2: vertex"),
    ("graph 2 3\n", "line 1"),
    ("", "missing"),
])
def test_parse_errors(text, message):
    with pytest.raises(GraphError, match=message):
        parse_graph(text)


def test_comments_blank_lines_and_isolated_vertices():
    g = parse_graph("# header comment\necg 3 5\n\n2 1 3  # trailing\n")
    assert g.n == 5 and g.edges == ((1, 2, 3),)
    assert parse_graph("ecg 1 0\n").n == 0


def test_constructor_validates():
    with pytest.raises(GraphError):
        EdgeColouredGraph(3, 2, ((0, 1, 1), (1, 0, 2)))
    with pytest.raises(GraphError):
        EdgeColouredGraph(3, 2, ((0, 1, 0),))


@st.composite
def graphs(draw, max_n=7, max_m=4):
    n = draw(st.integers(0, max_n))
    m = draw(st.integers(1, max_m))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return EdgeColouredGraph(n, m, tuple((u, v, draw(st.integers(1, m))) for u, v in chosen))


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_serialize_round_trip(g):
    text = serialize_graph(g)
    assert parse_graph(text) == g
    assert [tuple(map(int, l.split()))[:2] for l in text.splitlines()[1:]] == sorted(g.pairs)


def test_structure_examples():
    c4 = cycle_graph([1, 1, 1, 2], 2)
    st4 = structure(c4)
    assert st4.is_bipartite and st4.parts == ((0, 2), (1, 3))
    tri = structure(cycle_graph([1, 1, 1], 1))
    assert not tri.is_bipartite and tri.odd_cycle == (0, 1, 2)
    path = EdgeColouredGraph(3, 1, ((0, 1, 1), (1, 2, 1)))
    sp = structure(path)
    assert sp.is_bipartite and sp.forest.cotree_edges == ()


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_structure_invariants(g):
    s = structure(g)
    forest = s.forest
    # spanning forest: n - (#components) tree edges, one root per component
    assert len(forest.tree_edges) == g.n - len(forest.roots)
    assert set(forest.tree_edges) | set(forest.cotree_edges) == set(g.pairs)
    for v in range(g.n):
        if forest.parent[v] >= 0:
            p = forest.parent[v]
            assert (min(p, v), max(p, v)) in forest.tree_edges
            assert forest.component[p] == forest.component[v]
    for u, v in forest.cotree_edges:
        cyc = forest.fundamental_cycle(u, v)
        assert cyc[0] == u and cyc[-1] == v and len(set(cyc)) == len(cyc)
        assert all(g.has_edge(a, b) for a, b in zip(cyc, cyc[1:]))
        if s.is_bipartite:
            assert len(cyc) % 2 == 0
    if s.is_bipartite:
        assert all(s.side[u] != s.side[v] for u, v in g.pairs)
    else:
        cyc = s.odd_cycle
        assert len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc)
        assert all(g.has_edge(cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc)))
        assert any(len(forest.fundamental_cycle(u, v)) % 2 == 1 for u, v in forest.cotree_edges)


def test_abelianize_examples():
    g = cycle_graph([1, 2, 4, 3], 4)
    assert abelianize_graph(g, block_system(z4())) == g
    h = abelianize_graph(cycle_graph([1, 1, 1, 2], 3), block_system(s3()))
    assert h.m == 1 and h.colours == (1, 1, 1, 1)
    h = abelianize_graph(cycle_graph([1, 2, 3, 4], 4), block_system(d4()))
    assert h.m == 2
    assert [h.colour(s, (s + 1) % 4) for s in range(4)] == [1, 2, 1, 2]
    with pytest.raises(GraphError):
        abelianize_graph(k2(1, 3), block_system(d4()))


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=6, max_m=4).filter(lambda g: g.m == 4))
def test_abelianize_preserves_underlying_graph(g):
    h = abelianize_graph(g, block_system(d4()))
    assert h.same_underlying(g)


def test_forest_roots_are_component_minima():
    g = EdgeColouredGraph(6, 1, ((4, 5, 1), (1, 3, 1), (3, 2, 1)))
    f = spanning_forest(g)
    assert f.roots == (0, 1, 4)
