import pytest
from hypothesis import given
from hypothesis import strategies as st

from degpart import Graph, build_graph
from degpart.errors import (
    EmptyGraphError,
    EmptySetError,
    LoopEdgeError,
    SameVertexError,
    VertexOutOfRangeError,
)
from helpers import complete, cycle, edgeless, graph_from_bits, path, vertex_pairs


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, 2 ** (n * (n - 1) // 2) - 1))
    return graph_from_bits(n, bits)


def test_build_k3():
    G = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert G.m == 3
    assert G.adj[0] == frozenset({1, 2})


def test_build_dedups_symmetric_pair():
    G = build_graph(2, [(0, 1), (1, 0)])
    assert G.m == 1


def test_build_cycle_degrees():
    G = cycle(5)
    assert all(G.degree(u) == 2 for u in range(5))


def test_build_rejects_loop():
    with pytest.raises(LoopEdgeError):
        build_graph(3, [(1, 1)])


def test_build_rejects_out_of_range():
    with pytest.raises(VertexOutOfRangeError):
        build_graph(3, [(0, 3)])


def test_degree_in():
    C5 = cycle(5)
    assert C5.degree_in(0, range(5)) == 2
    assert C5.degree_in(0, {1, 2}) == 1
    assert C5.degree_in(0, ()) == 0
    with pytest.raises(VertexOutOfRangeError):
        C5.degree_in(7, {0})


def test_edges_within():
    assert complete(5).edges_within(range(5)) == 10
    assert cycle(5).edges_within({0, 1, 2}) == 2
    assert cycle(5).edges_within({3}) == 0
    assert cycle(5).edges_within(()) == 0


def test_edge_indicator():
    K3 = complete(3)
    assert K3.edge_indicator(0, 1) == 1
    assert cycle(5).edge_indicator(0, 2) == 0
    assert path(3).edge_indicator(0, 2) == 0
    with pytest.raises(SameVertexError):
        K3.edge_indicator(1, 1)


def test_min_degree():
    assert cycle(5).min_degree() == 2
    k4_pendant = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
    assert k4_pendant.min_degree() == 1
    assert edgeless(4).min_degree() == 0
    with pytest.raises(EmptyGraphError):
        Graph(0, []).min_degree()


def test_induced_subgraph():
    K5 = complete(5)
    sub, remap = K5.induced_subgraph({1, 2, 4})
    assert sub == complete(3)
    assert remap == {1: 0, 2: 1, 4: 2}

    sub, _ = cycle(5).induced_subgraph({0, 1, 2})
    assert sub == path(3)

    single, _ = cycle(5).induced_subgraph({3})
    assert single.n == 1 and single.m == 0

    with pytest.raises(EmptySetError):
        K5.induced_subgraph(())


@given(graphs())
def test_handshake(G):
    V = frozenset(range(G.n))
    assert sum(G.degree_in(u, V) for u in range(G.n)) == 2 * G.m
    for u in range(G.n):
        assert G.degree_in(u, V) == len(G.adj[u])


@given(graphs(min_n=1, max_n=7), st.integers(0, 2**7 - 1))
def test_partition_edge_counts(G, bits):
    X1 = frozenset(u for u in range(G.n) if bits >> u & 1)
    X2 = frozenset(range(G.n)) - X1
    cross = G.m - G.edges_within(X1) - G.edges_within(X2)
    assert cross >= 0
    assert cross == sum(G.degree_in(u, X2) for u in X1)


@given(graphs())
def test_induce_on_everything_is_identity(G):
    sub, remap = G.induced_subgraph(range(G.n))
    assert sub == G
    assert remap == {u: u for u in range(G.n)}


@given(graphs(min_n=2, max_n=8))
def test_sum_of_degrees_within_subset(G):
    pairs = vertex_pairs(G.n)
    X = frozenset(u for u, _ in pairs[: G.n // 2])
    assert sum(G.degree_in(u, X) for u in X) == 2 * G.edges_within(X)
