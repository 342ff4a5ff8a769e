"""
Eigenpairs of symmetric operators.

Operators up to DENSE_THRESHOLD rows go through LAPACK (scipy.linalg.eigh);
larger ones through ARPACK's implicitly restarted Lanczos (eigsh).
"""
from dataclasses import dataclass, field
import logging

import numpy as np
import scipy.linalg
from scipy.sparse.linalg import (
    ArpackError,
    ArpackNoConvergence,
    LinearOperator,
    eigsh,
)

from core.conf import curve_settings
from core.exceptions import EigenSolverError, SpectrumTooLargeError

logger = logging.getLogger(__name__)

SMALLEST = 'smallest'
LARGEST = 'largest'


@dataclass(frozen=True, eq=False)
class EigenPair:
    """Extreme eigenpair plus an orthonormal basis of its eigenspace.

    ``basis`` holds, column-wise, every eigenvector whose eigenvalue lies
    within the gap tolerance of ``value``; ``vector`` is its first column.
    """
    value: float
    vector: np.ndarray = field(repr=False)
    residual: float
    basis: np.ndarray = field(repr=False)

    @property
    def multiplicity(self):
        return self.basis.shape[1]


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Full eigendecomposition A = F diag(values) F^T, values ascending"""
    values: np.ndarray
    vectors: np.ndarray = field(repr=False)

    @property
    def dimension(self):
        return self.values.size

    @property
    def lambda_max(self):
        return float(self.values[-1])


def gap_tolerance(value):
    """Width of the numerical eigenspace around an extreme eigenvalue"""
    return curve_settings.GAP_TOL * max(1.0, abs(value))


def _fix_signs(vectors):
    """Make the largest-magnitude entry of every column positive"""
    pivots = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[pivots, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


def _residual(matrix, value, vector):
    return float(np.linalg.norm(matrix @ vector - value * vector))


def dense_eigh(dense, subset=None):
    """scipy.linalg.eigh with LAPACK failures raised as EigenSolverError"""
    try:
        return scipy.linalg.eigh(dense, subset_by_index=subset)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(f'LAPACK eigh failed: {exc}') from exc


def _dense_extreme(a, which):
    dense = a.dense()
    n = a.dimension
    k = min(n, 4)
    while True:
        subset = [0, k - 1] if which == SMALLEST else [n - k, n - 1]
        values, vectors = dense_eigh(dense, subset)
        if values.size < k:
            # syevr can drop members of a large degenerate cluster
            logger.debug('subset eigh returned %d of %d values at n=%d',
                         values.size, k, n)
            values, vectors = dense_eigh(dense)
            k = n
        if which == LARGEST:
            values, vectors = values[::-1], vectors[:, ::-1]
        close = np.abs(values - values[0]) <= gap_tolerance(values[0])
        if close.all() and k < n:
            k = min(n, 2 * k)
            continue
        return values[close], vectors[:, close]


def _lanczos_extreme(a, which, max_iter):
    n = a.dimension
    matrix = a.matrix
    if which == SMALLEST:
        # smallest of A is sigma minus the largest of sigma*I - A
        sigma = a.inf_norm()
        operator = LinearOperator(
            (n, n), matvec=lambda x: sigma * x - matrix @ x, dtype=np.float64
        )
    else:
        sigma = None
        operator = matrix

    v0 = np.random.default_rng(0).standard_normal(n)
    k = min(n - 1, 3)
    while True:
        try:
            values, vectors = eigsh(
                operator, k=k, which='LA', v0=v0, maxiter=max_iter, tol=0
            )
        except ArpackNoConvergence as exc:
            partial = np.asarray(exc.eigenvalues)
            if sigma is not None:
                partial = sigma - partial
            residuals = [
                _residual(matrix, value, exc.eigenvectors[:, i])
                for i, value in enumerate(partial)
            ]
            best = min(residuals) if residuals else None
            raise EigenSolverError(
                f'Lanczos did not converge in {max_iter} iterations',
                best_residual=best,
            ) from exc
        except ArpackError as exc:
            raise EigenSolverError(f'ARPACK failed: {exc}') from exc

        order = np.argsort(values)[::-1]
        values, vectors = values[order], vectors[:, order]
        if sigma is not None:
            values = sigma - values
        close = np.abs(values - values[0]) <= gap_tolerance(values[0])
        if close.all() and k < n - 1:
            k = min(n - 1, 2 * k)
            continue
        return values[close], vectors[:, close]


def extreme_eigenpair(a, which=SMALLEST, tol=None):
    """Smallest or largest eigenpair of a SymOp and its numerical eigenspace"""
    if which not in (SMALLEST, LARGEST):
        raise ValueError(f'which must be {SMALLEST!r} or {LARGEST!r}')
    if a.dimension < 2:
        raise ValueError('eigenproblem needs dimension >= 2')
    tol = curve_settings.SOLVER_TOL if tol is None else tol
    if tol <= 0:
        raise ValueError('tol must be positive')

    if a.dimension <= curve_settings.DENSE_THRESHOLD:
        values, basis = _dense_extreme(a, which)
    else:
        max_iter = curve_settings.MAX_ITER_FACTOR * a.dimension
        values, basis = _lanczos_extreme(a, which, max_iter)
        # Lanczos vectors of a cluster are orthogonal only to working accuracy
        basis, _ = np.linalg.qr(basis)

    basis = _fix_signs(basis)
    value = float(values[0])
    vector = basis[:, 0]
    residual = _residual(a.matrix, value, vector)
    allowed = tol * max(1.0, a.inf_norm())
    if residual > allowed:
        raise EigenSolverError(
            f'residual above {allowed:.3e}', best_residual=residual
        )
    if basis.shape[1] > 1:
        logger.debug('eigenspace of dimension %d at %.6g',
                     basis.shape[1], value)
    return EigenPair(value, vector, residual, basis)


def full_spectrum(a):
    """Dense eigendecomposition of a SymOp up to the dense threshold"""
    threshold = curve_settings.DENSE_THRESHOLD
    if a.dimension > threshold:
        raise SpectrumTooLargeError(
            f'dimension {a.dimension} above dense threshold {threshold}; '
            'use extreme_eigenpair for large operators'
        )
    values, vectors = dense_eigh(a.dense())
    return Spectrum(values, _fix_signs(vectors))
