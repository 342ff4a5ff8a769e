"""
Tests for extreme eigenpairs and full spectra.
"""
from unittest.mock import patch

import numpy as np
import scipy.linalg
from scipy.sparse.linalg import ArpackError, ArpackNoConvergence

from django.test import SimpleTestCase, override_settings

from core.exceptions import EigenSolverError, SpectrumTooLargeError
from core.generators import complete, cycle, geometric, grid, star
from spectral.eigen import (
    LARGEST,
    SMALLEST,
    extreme_eigenpair,
    full_spectrum,
)
from spectral.operators import SymOp, normalized_laplacian


class ExtremeEigenpairTests(SimpleTestCase):
    """Test extreme_eigenpair"""

    def test_complete_smallest(self):
        """Test the null vector of complete(4) is (1/2) 1"""
        pair = extreme_eigenpair(normalized_laplacian(complete(4)), SMALLEST)

        self.assertAlmostEqual(pair.value, 0.0, places=12)
        np.testing.assert_allclose(pair.vector, np.full(4, 0.5), atol=1e-10)
        self.assertEqual(pair.multiplicity, 1)
        self.assertLessEqual(pair.residual, 1e-10)

    def test_star_largest(self):
        """Test star(5) has largest eigenvalue 2"""
        pair = extreme_eigenpair(normalized_laplacian(star(5)), LARGEST)

        self.assertAlmostEqual(pair.value, 2.0, places=10)

    def test_diagonal_smallest_is_impulse(self):
        """Test M(0) = P^2 has the impulse at its zero entry"""
        pair = extreme_eigenpair(SymOp.diagonal([1.0, 0.0, 1.0, 4.0]))

        self.assertAlmostEqual(pair.value, 0.0, places=14)
        np.testing.assert_allclose(pair.vector, [0, 1, 0, 0], atol=1e-12)

    def test_degenerate_eigenspace_basis(self):
        """Test the eigenspace of 4/3 in complete(4) has dimension 3"""
        pair = extreme_eigenpair(normalized_laplacian(complete(4)), LARGEST)

        self.assertAlmostEqual(pair.value, 4 / 3, places=10)
        self.assertEqual(pair.multiplicity, 3)
        np.testing.assert_allclose(pair.basis.T @ pair.basis, np.eye(3),
                                   atol=1e-10)

    def test_agrees_with_full_spectrum(self):
        """Test smallest eigenvalues of random operators"""
        rng = np.random.default_rng(4)
        for _ in range(20):
            n = int(rng.integers(3, 12))
            a = rng.standard_normal((n, n))
            op = SymOp.from_matrix(a + a.T)

            pair = extreme_eigenpair(op, SMALLEST)

            self.assertAlmostEqual(pair.value, full_spectrum(op).values[0],
                                   delta=1e-8)

    def test_lanczos_matches_dense(self):
        """Test the iterative path above the dense threshold"""
        l = normalized_laplacian(geometric(60, 0.3, seed=2))
        expected = scipy.linalg.eigvalsh(l.dense())

        with override_settings(GRAPH_UNCERTAINTY={'DENSE_THRESHOLD': 10}):
            low = extreme_eigenpair(l, SMALLEST)
            high = extreme_eigenpair(l, LARGEST)

        self.assertAlmostEqual(low.value, 0.0, delta=1e-8)
        self.assertAlmostEqual(high.value, expected[-1], delta=1e-8)
        self.assertLessEqual(high.residual, 1e-10 * 2)

    def test_lanczos_failure_carries_residual(self):
        """Test non-convergence reports the best residual"""
        l = normalized_laplacian(cycle(20))
        vectors = np.ones((20, 1)) / np.sqrt(20)
        failure = ArpackNoConvergence('no', np.array([2.0]), vectors)

        with override_settings(GRAPH_UNCERTAINTY={'DENSE_THRESHOLD': 4}):
            with patch('spectral.eigen.eigsh', side_effect=failure):
                with self.assertRaises(EigenSolverError) as ctx:
                    extreme_eigenpair(l, LARGEST)

        self.assertAlmostEqual(ctx.exception.best_residual, 2.0, places=10)

    def test_large_degenerate_clusters(self):
        """Test star(200) and complete(200) around their big eigenspaces"""
        star_l = normalized_laplacian(star(200))
        complete_l = normalized_laplacian(complete(200))

        top = extreme_eigenpair(star_l, LARGEST)
        bottom = extreme_eigenpair(star_l, SMALLEST)
        cluster = extreme_eigenpair(complete_l, LARGEST)

        self.assertAlmostEqual(top.value, 2.0, places=10)
        self.assertEqual(top.multiplicity, 1)
        self.assertAlmostEqual(bottom.value, 0.0, places=10)
        self.assertAlmostEqual(cluster.value, 200 / 199, places=10)
        self.assertEqual(cluster.multiplicity, 199)

    def test_short_subset_uses_full_decomposition(self):
        """Test a subset call returning too few values is recovered"""
        real_eigh = scipy.linalg.eigh

        def dropping_eigh(a, subset_by_index=None):
            if subset_by_index is not None:
                return np.empty(0), np.empty((a.shape[0], 0))
            return real_eigh(a)

        with patch('scipy.linalg.eigh', side_effect=dropping_eigh):
            pair = extreme_eigenpair(normalized_laplacian(star(6)), LARGEST)

        self.assertAlmostEqual(pair.value, 2.0, places=10)
        self.assertEqual(pair.multiplicity, 1)

    def test_lapack_failure_is_numerical(self):
        """Test LinAlgError becomes EigenSolverError"""
        failure = np.linalg.LinAlgError('no convergence')

        with patch('scipy.linalg.eigh', side_effect=failure):
            with self.assertRaises(EigenSolverError):
                extreme_eigenpair(normalized_laplacian(cycle(6)), SMALLEST)

    def test_arpack_failure_is_numerical(self):
        """Test any ARPACK error becomes EigenSolverError"""
        l = normalized_laplacian(cycle(20))

        with override_settings(GRAPH_UNCERTAINTY={'DENSE_THRESHOLD': 4}):
            with patch('spectral.eigen.eigsh',
                       side_effect=ArpackError(-9999)):
                with self.assertRaises(EigenSolverError):
                    extreme_eigenpair(l, LARGEST)

    def test_rejects_bad_arguments(self):
        """Test tol and which are validated"""
        op = SymOp.diagonal([1.0, 2.0])

        with self.assertRaises(ValueError):
            extreme_eigenpair(op, 'middle')
        with self.assertRaises(ValueError):
            extreme_eigenpair(op, SMALLEST, tol=0.0)


class FullSpectrumTests(SimpleTestCase):
    """Test full_spectrum"""

    def test_known_spectra(self):
        """Test complete(4), star(5) and cycle(4)"""
        cases = [
            (complete(4), [0, 4 / 3, 4 / 3, 4 / 3]),
            (star(5), [0, 1, 1, 1, 2]),
            (cycle(4), [0, 1, 1, 2]),
        ]
        for g, values in cases:
            with self.subTest(graph=str(g)):
                spec = full_spectrum(normalized_laplacian(g))

                np.testing.assert_allclose(spec.values, values, atol=1e-12)

    def test_decomposition(self):
        """Test F^T F = I and L F = F diag(values)"""
        l = normalized_laplacian(grid(4, 3))

        spec = full_spectrum(l)
        f = spec.vectors

        np.testing.assert_allclose(f.T @ f, np.eye(12), atol=1e-10)
        np.testing.assert_allclose(l.dense() @ f, f * spec.values,
                                   atol=1e-10)
        self.assertTrue(np.all(np.diff(spec.values) >= 0))

    def test_connected_spectrum_range(self):
        """Test 0 is simple and lambda_N = 2 for bipartite graphs"""
        for g in (star(6), cycle(8), grid(3, 3)):
            with self.subTest(graph=str(g)):
                values = full_spectrum(normalized_laplacian(g)).values

                self.assertAlmostEqual(values[0], 0.0, places=12)
                self.assertGreater(values[1], 1e-8)
                self.assertAlmostEqual(values[-1], 2.0, places=10)

    @override_settings(GRAPH_UNCERTAINTY={'DENSE_THRESHOLD': 3})
    def test_too_large(self):
        """Test the dense path refuses operators above the threshold"""
        with self.assertRaises(SpectrumTooLargeError):
            full_spectrum(normalized_laplacian(complete(4)))
