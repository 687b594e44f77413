import pytest
from hypothesis import given, strategies as st

from blowup.graph import (
    BlowUpParams,
    Graph,
    blow_up,
    complement,
    complete_graph,
    empty_graph,
    path_graph,
    petersen_graph,
    star_graph,
)

from conftest import graphs

K2 = complete_graph(2)
P3 = path_graph(3)


def test_graph_normalizes_edge_orientation():
    g = Graph.from_edges(3, [(1, 0), (2, 1), (0, 1)])
    assert g.edges == {(0, 1), (1, 2)}
    assert g.degrees == (1, 2, 1)


@pytest.mark.parametrize("n, edges", [(0, []), (2, [(0, 0)]), (2, [(0, 2)]), (3, [(-1, 1)])])
def test_graph_rejects_bad_input(n, edges):
    with pytest.raises(ValueError):
        Graph.from_edges(n, edges)


def test_blowup_params_requires_positive_order():
    with pytest.raises(ValueError):
        BlowUpParams(0)
    with pytest.raises(ValueError):
        blow_up(K2, 0)


def test_complement_examples():
    assert complement(K2) == empty_graph(2)
    assert complement(empty_graph(1)) == empty_graph(1)
    assert complement(P3).edges == {(0, 2)}


def test_blow_up_examples():
    assert blow_up(K2, BlowUpParams(2)).edges == {(0, 1), (0, 3), (1, 2), (2, 3)}
    assert blow_up(P3, 1) == P3
    k24 = blow_up(P3, 2)
    assert k24.num_edges == 8
    centers = {1, 4}
    for c in centers:
        assert {v for e in k24.edges if c in e for v in e if v != c} == {0, 2, 3, 5}
    assert all(k24.has_edge(c, v) for c in centers for v in (0, 2, 3, 5))


def test_petersen_is_cubic():
    g = petersen_graph()
    assert g.n == 10 and g.num_edges == 15
    assert set(g.degrees) == {3}


def test_star_degrees():
    assert star_graph(3).degrees == (3, 1, 1, 1)


@given(graphs())
def test_degree_sum(g):
    assert sum(g.degrees) == 2 * g.num_edges


@given(graphs(), st.integers(1, 4))
def test_blow_up_edge_count_and_degrees(g, t):
    h = blow_up(g, t)
    assert h.n == g.n * t
    assert h.num_edges == t * t * g.num_edges
    for k in range(t):
        for v in range(g.n):
            assert h.degrees[k * g.n + v] == t * g.degrees[v]


@given(graphs(max_n=6), st.integers(1, 3))
def test_blow_up_adjacency_independent_of_copy(g, t):
    h = blow_up(g, t)
    n = g.n
    for k in range(t):
        for l in range(t):
            for u in range(n):
                for v in range(n):
                    if u != v or k != l:
                        assert h.has_edge(k * n + u, l * n + v) == g.has_edge(u, v)


@given(graphs())
def test_complement_is_involution(g):
    gc = complement(g)
    assert complement(gc) == g
    assert gc.degrees == tuple(g.n - 1 - d for d in g.degrees)
