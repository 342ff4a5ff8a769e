"""
Immutable undirected simple graphs.
"""
from dataclasses import dataclass, field

import networkx as nx
import numpy as np
import scipy.sparse as sparse
from scipy.sparse import csgraph

from core.exceptions import GraphError, SelfLoopError, VertexError


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph with a CSR adjacency and degree vector.

    ``edges`` is an (M, 2) integer array with ``u < v`` on every row,
    sorted lexicographically. Instances are read-only after construction.
    """
    n_vertices: int
    edges: np.ndarray
    adjacency: sparse.csr_matrix = field(repr=False)
    degrees: np.ndarray = field(repr=False)
    family: str = 'custom'

    @classmethod
    def from_edges(cls, n_vertices, edges, family='custom'):
        """Build a graph, dropping duplicate edges"""
        n_vertices = int(n_vertices)
        if n_vertices < 1:
            raise GraphError('a graph needs at least one vertex')
        pairs = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if pairs.size and (pairs.min() < 0 or pairs.max() >= n_vertices):
            raise VertexError(
                f'edge endpoint outside 0..{n_vertices - 1}'
            )
        if np.any(pairs[:, 0] == pairs[:, 1]):
            raise SelfLoopError('self-loops are not allowed')

        pairs = np.sort(pairs, axis=1)
        pairs = np.unique(pairs, axis=0)

        rows = np.concatenate([pairs[:, 0], pairs[:, 1]])
        cols = np.concatenate([pairs[:, 1], pairs[:, 0]])
        data = np.ones(rows.size, dtype=np.float64)
        adjacency = sparse.csr_matrix(
            (data, (rows, cols)), shape=(n_vertices, n_vertices)
        )
        adjacency.sort_indices()
        degrees = np.asarray(adjacency.sum(axis=1)).ravel().astype(np.int64)

        pairs.setflags(write=False)
        degrees.setflags(write=False)
        return cls(n_vertices, pairs, adjacency, degrees, family)

    @classmethod
    def from_networkx(cls, nx_graph, family='custom'):
        """Build from a networkx graph, relabelling nodes to 0..N-1"""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in nx_graph.edges()]
        return cls.from_edges(len(nodes), edges, family)

    def to_networkx(self):
        """Return an equivalent networkx graph"""
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n_vertices))
        nx_graph.add_edges_from(map(tuple, self.edges.tolist()))
        return nx_graph

    @property
    def n_edges(self):
        return int(self.edges.shape[0])

    def neighbors(self, v):
        """Sorted neighbor ids of vertex v"""
        self.check_vertex(v)
        start, stop = self.adjacency.indptr[v], self.adjacency.indptr[v + 1]
        return self.adjacency.indices[start:stop]

    def check_vertex(self, v):
        """Raise VertexError unless v is a vertex id"""
        if not 0 <= int(v) < self.n_vertices:
            raise VertexError(
                f'vertex {v} outside 0..{self.n_vertices - 1}'
            )
        return int(v)

    def __str__(self):
        return (
            f'{self.family} graph (N={self.n_vertices}, M={self.n_edges})'
        )


def is_connected(g):
    """True if a breadth-first search from vertex 0 reaches every vertex"""
    if g.n_vertices == 1:
        return True
    order = csgraph.breadth_first_order(
        g.adjacency, 0, directed=False, return_predecessors=False
    )
    return order.size == g.n_vertices
