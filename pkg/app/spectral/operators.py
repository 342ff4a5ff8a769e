"""
Sparse symmetric operators.

A SymOp keeps only its lower triangle, so the full matrix it hands out is
symmetric by construction.
"""
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import scipy.sparse as sparse

from core.exceptions import IsolatedVertexError, SignalError


@dataclass(frozen=True, eq=False)
class SymOp:
    """Real symmetric matrix stored as its lower triangle"""
    lower: sparse.csr_matrix = field(repr=False)

    @classmethod
    def from_matrix(cls, matrix):
        """Wrap a symmetric matrix (dense or sparse); upper triangle ignored"""
        lower = sparse.tril(sparse.csr_matrix(matrix, dtype=np.float64))
        return cls(sparse.csr_matrix(lower))

    @classmethod
    def diagonal(cls, values):
        values = np.asarray(values, dtype=np.float64)
        return cls(sparse.diags(values, format='csr'))

    @property
    def dimension(self):
        return self.lower.shape[0]

    @cached_property
    def matrix(self):
        """Full symmetric CSR matrix"""
        strict = sparse.tril(self.lower, k=-1)
        return sparse.csr_matrix(self.lower + strict.T)

    @cached_property
    def diag(self):
        return self.lower.diagonal()

    @property
    def is_diagonal(self):
        return sparse.tril(self.lower, k=-1).count_nonzero() == 0

    def dense(self):
        return self.matrix.toarray()

    def matvec(self, x):
        return self.matrix @ x

    def quad(self, x):
        """x^T A x"""
        x = np.asarray(x, dtype=np.float64)
        if x.shape[0] != self.dimension:
            raise SignalError(
                f'signal has {x.shape[0]} entries, operator needs '
                f'{self.dimension}'
            )
        return float(x @ (self.matrix @ x))

    def inf_norm(self):
        """Maximum absolute row sum"""
        return float(abs(self.matrix).sum(axis=1).max())

    def combine(self, other, scale):
        """self + scale * other, sharing the lower-triangle layout"""
        return SymOp(sparse.csr_matrix(self.lower + scale * other.lower))

    def congruence(self, scaling):
        """D A D for the diagonal matrix D = diag(scaling)"""
        d = sparse.diags(np.asarray(scaling, dtype=np.float64))
        return SymOp(sparse.csr_matrix(d @ self.lower @ d))


def normalized_laplacian(g):
    """I - D^{-1/2} A D^{-1/2} for a graph without isolated vertices"""
    if np.any(g.degrees == 0):
        isolated = int(np.flatnonzero(g.degrees == 0)[0])
        raise IsolatedVertexError(f'vertex {isolated} has degree 0')
    inv_sqrt = 1.0 / np.sqrt(g.degrees.astype(np.float64))
    scaled = sparse.diags(inv_sqrt) @ g.adjacency @ sparse.diags(inv_sqrt)
    laplacian = sparse.identity(g.n_vertices, format='csr') - scaled
    return SymOp.from_matrix(laplacian)


def dc_vector(g):
    """Null vector f_1 of the normalized Laplacian, sqrt(deg / sum deg)"""
    degrees = g.degrees.astype(np.float64)
    return np.sqrt(degrees / degrees.sum())
