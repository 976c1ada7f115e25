"""Vertex-edge pair basis and the expanded graph.

Each vertex ``v`` of degree ``d`` is replaced by a ``d``-clique whose
members are the pairs ``(v, j)`` for the edges ``j`` at ``v``. Each edge
``j = {v, v'}`` becomes a single "pair edge" joining ``(v, j)`` and
``(v', j)``. Basis order is vertex-major, ascending edge id inside a
vertex, so each clique occupies a contiguous index range.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

import numpy as np

from .errors import IsolatedVertexError
from .graph import Edge, Graph, percolate

__all__ = [
    "PortPair",
    "GammaIndex",
    "ExpandedGraph",
    "gamma_basis",
    "expand",
    "coin_subgraph",
    "shift_subgraph",
]


class PortPair(NamedTuple):
    v: int
    j: int


@dataclass(frozen=True)
class GammaIndex:
    pairs: tuple
    index: dict
    vertex_blocks: tuple  # per vertex of G: tuple of basis indices
    edge_pairs: tuple  # per edge position of G: (index at lower vertex, index at higher vertex)
    edge_ids: tuple  # edge id of G for each entry of edge_pairs

    def __len__(self):
        return len(self.pairs)

    def block_slice(self, v):
        block = self.vertex_blocks[v]
        return slice(block[0], block[-1] + 1)

    def vertex_of(self):
        """Array mapping each basis index to its vertex of G."""
        return np.array([p.v for p in self.pairs], dtype=np.int64)


@dataclass(frozen=True)
class ExpandedGraph:
    source: Graph
    graph: Graph
    gamma: GammaIndex
    clique_edges: frozenset
    pair_edges: frozenset

    @property
    def dim(self):
        return len(self.gamma)

    @property
    def degrees(self):
        return tuple(len(b) for b in self.gamma.vertex_blocks)


def gamma_basis(g: Graph) -> GammaIndex:
    pairs = []
    blocks = []
    for v in range(g.n_vertices):
        incident = g.incident(v)
        if not incident:
            raise IsolatedVertexError(f"vertex {v} has degree 0 and no coin space")
        start = len(pairs)
        pairs.extend(PortPair(v, e.id) for e in incident)
        blocks.append(tuple(range(start, len(pairs))))
    index = {p: k for k, p in enumerate(pairs)}
    edge_pairs = tuple(
        (index[PortPair(min(e.u, e.v), e.id)], index[PortPair(max(e.u, e.v), e.id)]) for e in g.edges
    )
    return GammaIndex(tuple(pairs), index, tuple(blocks), edge_pairs, g.edge_ids)


def expand(g: Graph) -> ExpandedGraph:
    gamma = gamma_basis(g)
    edges = []
    clique, pair = [], []
    for block in gamma.vertex_blocks:
        for a, b in combinations(block, 2):
            clique.append(len(edges))
            edges.append(Edge(a, b, 1.0, len(edges)))
    for a, b in gamma.edge_pairs:
        pair.append(len(edges))
        edges.append(Edge(a, b, 1.0, len(edges)))
    labels = tuple(f"({p.v},{p.j})" for p in gamma.pairs)
    expanded = Graph(len(gamma), tuple(edges), labels)
    return ExpandedGraph(g, expanded, gamma, frozenset(clique), frozenset(pair))


def coin_subgraph(x: ExpandedGraph) -> Graph:
    """Keep only clique edges: one separated clique per vertex of G."""
    return percolate(x.graph, x.clique_edges)


def shift_subgraph(x: ExpandedGraph) -> Graph:
    """Keep only pair edges: one separated 2-clique per edge of G."""
    return percolate(x.graph, x.pair_edges)
