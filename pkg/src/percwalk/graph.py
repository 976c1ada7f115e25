"""Undirected, weighted, loop-free graphs and their Laplacians."""

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional

import numpy as np

from .errors import GraphError, UnknownEdgeIdError

__all__ = ["Edge", "Graph", "adjacency", "laplacian", "percolate"]


class Edge(NamedTuple):
    u: int
    v: int
    weight: float = 1.0
    id: int = -1

    @property
    def endpoints(self):
        return frozenset((self.u, self.v))


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph on vertices ``0..n_vertices-1``.

    Edge ids default to list positions. A percolated graph keeps the ids
    of its parent, so ids need only be unique, not contiguous.
    """

    n_vertices: int
    edges: tuple = ()
    labels: Optional[tuple] = None
    _by_id: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n_vertices < 0:
            raise GraphError("vertex count must be non-negative")
        edges = []
        seen_pairs = set()
        by_id = {}
        for pos, e in enumerate(self.edges):
            e = Edge(*e)
            if e.id < 0:
                e = e._replace(id=pos)
            u, v = int(e.u), int(e.v)
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise GraphError(f"edge {e.id} has an endpoint outside 0..{self.n_vertices - 1}")
            if u == v:
                raise GraphError(f"edge {e.id} is a loop at vertex {u}")
            if not np.isfinite(e.weight) or e.weight < 0:
                raise GraphError(f"edge {e.id} has invalid weight {e.weight!r}")
            pair = frozenset((u, v))
            if pair in seen_pairs:
                raise GraphError(f"parallel edge between {u} and {v}")
            if e.id in by_id:
                raise GraphError(f"duplicate edge id {e.id}")
            seen_pairs.add(pair)
            e = Edge(u, v, float(e.weight), int(e.id))
            by_id[e.id] = e
            edges.append(e)
        if self.labels is not None and len(self.labels) != self.n_vertices:
            raise GraphError("one label per vertex required")
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "_by_id", by_id)

    @classmethod
    def from_edge_list(cls, n_vertices, pairs: Iterable, weights=None):
        pairs = list(pairs)
        if weights is None:
            weights = [1.0] * len(pairs)
        return cls(n_vertices, tuple(Edge(u, v, w, i) for i, ((u, v), w) in enumerate(zip(pairs, weights))))

    @property
    def n_edges(self):
        return len(self.edges)

    @property
    def edge_ids(self):
        return tuple(e.id for e in self.edges)

    def edge(self, edge_id):
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise UnknownEdgeIdError(f"unknown edge id {edge_id}") from None

    def degrees(self, weighted=False):
        deg = np.zeros(self.n_vertices)
        for e in self.edges:
            w = e.weight if weighted else 1.0
            deg[e.u] += w
            deg[e.v] += w
        return deg

    def incident(self, vertex):
        """Edges at ``vertex`` in ascending id order."""
        return sorted((e for e in self.edges if vertex in (e.u, e.v)), key=lambda e: e.id)

    def is_unit_weight(self):
        return all(e.weight == 1.0 for e in self.edges)

    def components(self):
        """Connected components as sorted vertex lists."""
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            parent[find(e.u)] = find(e.v)
        groups = {}
        for x in range(self.n_vertices):
            groups.setdefault(find(x), []).append(x)
        return sorted(groups.values())


def adjacency(g: Graph):
    a = np.zeros((g.n_vertices, g.n_vertices))
    for e in g.edges:
        a[e.u, e.v] = a[e.v, e.u] = e.weight
    return a


def laplacian(g: Graph):
    """Graph Laplacian ``D - A`` with weighted degrees on the diagonal."""
    a = adjacency(g)
    return np.diag(a.sum(axis=1)) - a


def percolate(g: Graph, keep):
    """Subgraph on the same vertices containing only the edges with ids in ``keep``."""
    keep = set(keep)
    for eid in keep:
        g.edge(eid)
    return Graph(g.n_vertices, tuple(e for e in g.edges if e.id in keep), g.labels)
