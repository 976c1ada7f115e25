import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from percwalk.errors import GraphError, UnknownEdgeIdError
from percwalk.graph import Edge, Graph, adjacency, laplacian, percolate
from percwalk.linalg import hermitian_eig

from conftest import complete_graph

# vertices 1, 2, 3 relabelled 0, 1, 2; edge {1,2} weight 1, edge {2,3} weight 2
WEIGHTED_PATH = Graph.from_edge_list(3, [(0, 1), (1, 2)], weights=[1.0, 2.0])


def test_adjacency_weighted_path():
    np.testing.assert_array_equal(adjacency(WEIGHTED_PATH), [[0, 1, 0], [1, 0, 2], [0, 2, 0]])


def test_adjacency_single_vertex():
    np.testing.assert_array_equal(adjacency(Graph(1)), [[0]])


def test_adjacency_triangle():
    np.testing.assert_array_equal(adjacency(complete_graph(3)), np.ones((3, 3)) - np.eye(3))


def test_laplacian_weighted_path():
    np.testing.assert_array_equal(laplacian(WEIGHTED_PATH), [[1, -1, 0], [-1, 3, -2], [0, -2, 2]])


def test_laplacian_after_switching_off_heavy_edge():
    lp = laplacian(percolate(WEIGHTED_PATH, {0}))
    np.testing.assert_array_equal(lp, [[1, -1, 0], [-1, 1, 0], [0, 0, 0]])


@pytest.mark.parametrize("n", [2, 3, 5])
def test_laplacian_complete(n):
    np.testing.assert_array_equal(laplacian(complete_graph(n)), n * np.eye(n) - np.ones((n, n)))


def test_percolate_all_and_none():
    assert percolate(WEIGHTED_PATH, WEIGHTED_PATH.edge_ids) == WEIGHTED_PATH
    empty = percolate(WEIGHTED_PATH, set())
    assert empty.n_edges == 0 and empty.n_vertices == 3
    np.testing.assert_array_equal(laplacian(empty), np.zeros((3, 3)))


def test_percolate_preserves_ids():
    g = complete_graph(4)
    sub = percolate(g, {1, 4})
    assert sub.edge_ids == (1, 4)
    assert sub.edge(4) == g.edge(4)


def test_percolate_unknown_id():
    with pytest.raises(UnknownEdgeIdError):
        percolate(WEIGHTED_PATH, {7})


@pytest.mark.parametrize(
    "edges",
    [
        [(0, 0)],
        [(0, 1), (1, 0)],
        [(0, 3)],
        [Edge(0, 1, -1.0, 0)],
        [Edge(0, 1, 1.0, 0), Edge(1, 2, 1.0, 0)],
    ],
)
def test_invalid_graphs(edges):
    with pytest.raises(GraphError):
        Graph(3, tuple(edges))


def test_disconnected_and_isolated_allowed():
    g = Graph.from_edge_list(5, [(0, 1), (2, 3)])
    assert g.components() == [[0, 1], [2, 3], [4]]
    assert list(g.degrees()) == [1, 1, 1, 1, 0]


def test_incident_sorted_by_id():
    g = Graph(3, (Edge(1, 2, 1.0, 5), Edge(0, 1, 1.0, 2)))
    assert [e.id for e in g.incident(1)] == [2, 5]


def _weighted_graph(data, dyadic):
    n = data.draw(st.integers(1, 10))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if dyadic:
        # multiples of 1/16 below 64 add exactly in binary floating point
        weights = [data.draw(st.integers(0, 1023)) / 16 for _ in chosen]
    else:
        weights = [data.draw(st.floats(0, 10, allow_nan=False)) for _ in chosen]
    return Graph.from_edge_list(n, chosen, weights)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_laplacian_additivity_exact(data):
    g = _weighted_graph(data, dyadic=True)
    side = [data.draw(st.booleans()) for _ in g.edges]
    e1 = {e.id for e, s in zip(g.edges, side) if s}
    e2 = set(g.edge_ids) - e1
    np.testing.assert_array_equal(laplacian(percolate(g, e1)) + laplacian(percolate(g, e2)), laplacian(g))


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_laplacian_properties(data):
    g = _weighted_graph(data, dyadic=False)
    lp = laplacian(g)
    assert np.all(np.abs(lp.sum(axis=1)) <= 1e-14 * max(1.0, np.abs(lp).max()))
    np.testing.assert_array_equal(lp, lp.T)
    side = [data.draw(st.booleans()) for _ in g.edges]
    e1 = {e.id for e, s in zip(g.edges, side) if s}
    parts = laplacian(percolate(g, e1)) + laplacian(percolate(g, set(g.edge_ids) - e1))
    np.testing.assert_allclose(parts, lp, rtol=0, atol=1e-13)
    w, _ = hermitian_eig(lp)
    assert w[0] >= -1e-10 * max(1.0, np.abs(lp).max())
