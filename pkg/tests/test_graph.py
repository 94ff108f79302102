import networkx as nx
import pytest
from hypothesis import given, strategies as st

from equipart import Graph, edges_between, parse_graph
from equipart.errors import MalformedInput, OverlappingSets
from graphs_util import complete, path


def test_graph6_k4():
    g = parse_graph("C~", "graph6")
    assert g.n == 4 and g.m == 6
    assert list(g.edges()) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_graph6_header_stripped():
    g = parse_graph(">>graph6<<C~", "graph6")
    assert g.m == 6


def test_single_vertex_edge_list():
    g = parse_graph("1\n", "edge_list")
    assert g.n == 1 and g.m == 0


def test_edge_list_p4():
    g = parse_graph("4\n0 1\n1 2\n2 3", "edge_list")
    assert g.n == 4
    assert g.adj == ((1,), (0, 2), (1, 3), (2,))


def test_edge_list_duplicates_collapse():
    g = parse_graph("0 1\n1 0\n0 1\n", "edge_list")
    assert g.m == 1


def test_edge_list_rejects_self_loop():
    with pytest.raises(MalformedInput) as exc:
        parse_graph("3\n0 0\n", "edge_list")
    assert exc.value.line == 2


def test_edge_list_rejects_bad_token():
    with pytest.raises(MalformedInput):
        parse_graph("2\n0 x\n", "edge_list")


def test_edge_list_rejects_out_of_range():
    with pytest.raises(MalformedInput):
        parse_graph("2\n0 5\n", "edge_list")


def test_graph6_rejects_large_prefix():
    with pytest.raises(MalformedInput):
        parse_graph("~??", "graph6")


def test_graph6_roundtrip_matches_networkx():
    # networkx's encoder is the independent reference for the byte format
    for h in (nx.petersen_graph(), nx.icosahedral_graph(),
              nx.path_graph(9), nx.complete_graph(6)):
        g = Graph(h.number_of_nodes(), list(h.edges()))
        ours = g.to_graph6()
        # nx encodes in node-iteration order; pin it to sorted labels
        h2 = nx.Graph()
        h2.add_nodes_from(range(g.n))
        h2.add_edges_from(g.edges())
        theirs = nx.to_graph6_bytes(h2, header=False).decode().strip()
        assert ours == theirs
        assert parse_graph(ours, "graph6") == g


def test_edge_list_roundtrip():
    g = parse_graph("5\n0 1\n2 3\n1 4\n", "edge_list")
    assert parse_graph(g.to_edge_list(), "edge_list") == g


def test_edges_between_k4():
    assert edges_between(complete(4), {0, 1}, {2, 3}) == 4


def test_edges_between_empty_side():
    assert edges_between(complete(4), set(), {0, 1, 2, 3}) == 0


def test_edges_between_p4():
    assert edges_between(path(4), {0, 3}, {1, 2}) == 2


def test_edges_between_rejects_overlap():
    with pytest.raises(OverlappingSets):
        edges_between(complete(4), {0, 1}, {1, 2})


@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(all_pairs), unique=True,
                          max_size=len(all_pairs)) if all_pairs
                 else st.just([]))
    return Graph(n, edges)


@given(small_graphs(), st.data())
def test_edges_between_additive_over_disjoint_union(g, data):
    verts = list(range(g.n))
    labels = data.draw(st.lists(st.integers(min_value=0, max_value=3),
                                min_size=g.n, max_size=g.n))
    u = {v for v, l in zip(verts, labels) if l == 0}
    v1 = {v for v, l in zip(verts, labels) if l == 1}
    w = {v for v, l in zip(verts, labels) if l == 2}
    assert edges_between(g, u, v1 | w) == \
        edges_between(g, u, v1) + edges_between(g, u, w)


@given(small_graphs())
def test_m_is_half_adjacency_sum(g):
    assert 2 * g.m == sum(len(a) for a in g.adj)
