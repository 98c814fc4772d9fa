import collections
import random

import pytest

from edgeswitch.coloured_graph import EdgeColouredGraph, cycle_graph, k2
from edgeswitch.perm_groups import GroupError
from edgeswitch.switch_graph import build_switch_graph, serialize_switch_graph
from edgeswitch.coloured_graph import parse_graph

from support import ABELIAN_TRANSITIVE, random_graph, s3, trivial1, z2


def test_k2_under_z2_is_alternating_four_cycle():
    sw = build_switch_graph(k2(1, 2), z2())
    g = sw.graph
    assert g.n == 4 and len(g.edges) == 4
    assert all(g.degree(x) == 2 for x in range(4))
    for x in range(4):
        assert sorted(c for _, c in g.adjacency[x]) == [1, 2]


@pytest.mark.parametrize("name", sorted(ABELIAN_TRANSITIVE))
def test_k2_one_edge_of_each_colour_per_vertex(name):
    G = ABELIAN_TRANSITIVE[name]()
    for i in range(1, G.degree + 1):
        g = build_switch_graph(k2(i, G.degree), G).graph
        for x in range(g.n):
            assert sorted(c for _, c in g.adjacency[x]) == list(range(1, G.degree + 1))


def test_trivial_group_gives_the_graph_itself():
    h = EdgeColouredGraph(4, 1, ((0, 1, 1), (1, 2, 1), (0, 3, 1)))
    assert build_switch_graph(h, trivial1()).graph == h


def test_identity_copy_is_an_embedded_copy():
    rng = random.Random(2)
    for make in ABELIAN_TRANSITIVE.values():
        G = make()
        h = random_graph(rng, 5, G.degree, 0.6)
        sw = build_switch_graph(h, G)
        ids = sw.identity_copy()
        for u, v, c in h.edges:
            assert sw.graph.colour(ids[u], ids[v]) == c
        assert [sw.label(x) for x in ids] == [(v, G.identity) for v in range(h.n)]


def test_size_and_fibre_colour_counts():
    rng = random.Random(4)
    for make in ABELIAN_TRANSITIVE.values():
        G = make()
        k = G.order
        for _ in range(10):
            h = random_graph(rng, rng.randint(2, 5), G.degree, 0.6)
            sw = build_switch_graph(h, G)
            assert sw.graph.n == h.n * k
            assert len(sw.graph.edges) == len(h.edges) * k * k
            # each base edge lifts to k^2 edges, k of each colour per copy of x
            for x, y, _ in h.edges:
                for p in G.elements:
                    a = sw.vertex_id(x, p)
                    cols = collections.Counter(
                        sw.graph.colour(a, sw.vertex_id(y, q)) for q in G.elements)
                    assert cols == collections.Counter(range(1, G.degree + 1))


def test_non_abelian_rejected():
    with pytest.raises(GroupError):
        build_switch_graph(cycle_graph([1, 2, 3], 3), s3())


def test_serialization_parses_back():
    sw = build_switch_graph(k2(1, 2), z2())
    text = serialize_switch_graph(sw)
    assert parse_graph(text) == sw.graph
    assert "#" in text
