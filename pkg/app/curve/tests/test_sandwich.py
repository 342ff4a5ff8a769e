"""
Tests for the sandwich refinement and point queries.
"""
import math

import numpy as np

from django.test import SimpleTestCase, override_settings, tag

from core.exceptions import DomainError, GraphError
from core.generators import complete, geometric, path, smallworld, star
from curve.bounds import distance_to_polyline, hausdorff_gap
from curve.oracles import complete_gamma, star_gamma
from curve.problem import UncertaintyProblem, gap_bound, sufficient_solves
from curve.sandwich import (
    point_query,
    refine_rounds,
    refine_to_gap,
    sandwich,
)
from spectral.operators import SymOp


def diagonal_problem():
    """Curve through (0, 2), (1, 0), (2, 0), (3, 2) made of segments"""
    return UncertaintyProblem(
        SymOp.diagonal([0.0, 1.0, 2.0, 3.0]),
        SymOp.diagonal([2.0, 0.0, 0.0, 2.0]),
        [1.0, 0.0, 0.0, 0.0],
    )


class RoundsTests(SimpleTestCase):
    """Test refinement in rounds"""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.problem = UncertaintyProblem.from_graph(complete(10), 0)
        cls.bounds = sandwich(cls.problem, rounds=8)

    def test_solve_count(self):
        """Test 8 rounds spend 257 solves"""
        self.assertEqual(self.bounds.solves, 257)
        self.assertEqual(len(self.bounds.knots), 257)

    def test_knots_on_closed_form(self):
        """Test every knot of complete(10) lies on its ellipse"""
        for knot in self.bounds.knots:
            self.assertAlmostEqual(knot.g, complete_gamma(10, knot.s),
                                   delta=1e-6)

    def test_closed_form_bracketed(self):
        """Test lower <= gamma <= upper on a grid"""
        s = np.linspace(0, 10 / 9, 500)
        gamma = complete_gamma(10, s)

        self.assertTrue(np.all(self.bounds.lower_at(s) - 1e-9 <= gamma))
        self.assertTrue(np.all(gamma <= self.bounds.upper_at(s) + 1e-9))

    def test_gap_within_solve_bound(self):
        """Test the gap and the distance to the ellipse after 257 solves"""
        limit = gap_bound(self.problem.width, self.bounds.solves)
        s = np.linspace(0, 10 / 9, 2000)
        ellipse = np.column_stack([s, complete_gamma(10, s)])

        self.assertLessEqual(hausdorff_gap(self.bounds), limit)
        self.assertLessEqual(self.bounds.gap, limit)
        self.assertLessEqual(
            distance_to_polyline(ellipse, self.bounds.upper).max(), limit,
        )

    def test_large_degenerate_graphs(self):
        """Test star(200) and complete(200) run through all rounds"""
        cases = [
            (star(200), star_gamma),
            (complete(200), lambda s: complete_gamma(200, s)),
        ]
        for g, gamma in cases:
            with self.subTest(graph=str(g)):
                bounds = sandwich(UncertaintyProblem.from_graph(g, 0),
                                  rounds=4)
                s = np.linspace(*bounds.domain, 200)

                np.testing.assert_allclose(bounds.g_values,
                                           gamma(bounds.s_values), atol=1e-6)
                self.assertTrue(np.all(bounds.lower_at(s) - 1e-9
                                       <= gamma(s)))
                self.assertTrue(np.all(gamma(s) <= bounds.upper_at(s)
                                       + 1e-9))

    def test_other_sizes(self):
        """Test complete(4) and complete(50) and stars bracket their
        closed forms"""
        cases = [
            (complete(4), lambda s: complete_gamma(4, s)),
            (complete(50), lambda s: complete_gamma(50, s)),
            (star(10), star_gamma),
        ]
        for g, gamma in cases:
            with self.subTest(graph=str(g)):
                bounds = sandwich(UncertaintyProblem.from_graph(g, 0),
                                  rounds=8)
                s = np.linspace(*bounds.domain, 400)

                self.assertTrue(np.all(bounds.lower_at(s) - 1e-9
                                       <= gamma(s)))
                self.assertTrue(np.all(gamma(s) <= bounds.upper_at(s)
                                       + 1e-9))

    def test_history_nonincreasing(self):
        """Test the gap never grows from one round to the next"""
        gaps = [gap for _, gap in self.bounds.history]

        self.assertEqual(len(gaps), 9)
        self.assertTrue(np.all(np.diff(gaps) <= 1e-12))
        self.assertAlmostEqual(gaps[-1], self.bounds.gap)

    def test_endpoints(self):
        """Test the bounds start and end on the domain ends"""
        first, last = self.bounds.knots[0], self.bounds.knots[-1]

        self.assertAlmostEqual(first.s, 0.0, delta=1e-12)
        self.assertAlmostEqual(first.g, 0.9, delta=1e-12)
        self.assertAlmostEqual(last.s, 10 / 9, delta=1e-12)
        self.assertAlmostEqual(last.g, 0.1, delta=1e-12)

    def test_workers_do_not_change_result(self):
        """Test threads give the same knots as a single worker"""
        single = refine_rounds(self.problem, 4, workers=1)
        threaded = refine_rounds(self.problem, 4, workers=4)

        np.testing.assert_array_equal(single.s_values, threaded.s_values)

    def test_star_independent_of_size(self):
        """Test star(5) and star(100) give the same upper bound"""
        s = np.linspace(0, 2, 301)
        small = sandwich(UncertaintyProblem.from_graph(star(5), 0), rounds=8)
        large = sandwich(UncertaintyProblem.from_graph(star(100), 0),
                         rounds=8)

        np.testing.assert_allclose(small.upper_at(s), large.upper_at(s),
                                   atol=1e-9)
        self.assertTrue(np.all(small.lower_at(s) - 1e-9 <= star_gamma(s)))


class GapTests(SimpleTestCase):
    """Test refinement until a target gap"""

    def test_star_reaches_epsilon(self):
        """Test star(10) reaches a gap of 1e-6 within the solve bound"""
        problem = UncertaintyProblem.from_graph(star(10), 0)

        bounds = sandwich(problem, epsilon=1e-6)

        self.assertLessEqual(bounds.gap, 1e-6)
        self.assertLessEqual(bounds.solves,
                             sufficient_solves(problem.width, 1e-6))

    def test_default_epsilon(self):
        """Test the default target scales with W"""
        problem = UncertaintyProblem.from_graph(complete(5), 0)

        bounds = sandwich(problem)

        self.assertLessEqual(bounds.gap, 1e-6 * problem.width)

    def test_max_refinements(self):
        """Test the solve budget stops refinement"""
        problem = UncertaintyProblem.from_graph(complete(8), 0)

        bounds = refine_to_gap(problem, epsilon=1e-12, max_refinements=5)

        self.assertEqual(bounds.solves, 7)

    def test_bad_epsilon(self):
        """Test a non-positive target is rejected"""
        problem = UncertaintyProblem.from_graph(complete(5), 0)

        with self.assertRaises(ValueError):
            refine_to_gap(problem, epsilon=0.0)

    def test_too_small_graph(self):
        """Test a graph with two vertices is rejected"""
        problem = UncertaintyProblem.from_graph(path(2), 0)

        with self.assertRaises(GraphError):
            sandwich(problem, epsilon=1e-3)

    def test_eigenspace_segments(self):
        """Test segments from two-dimensional eigenspaces close the gap"""
        for bounds in (refine_to_gap(diagonal_problem()),
                       refine_rounds(diagonal_problem(), 8)):
            np.testing.assert_allclose(bounds.s_values, [0, 1, 2, 3])
            self.assertAlmostEqual(bounds.gap, 0.0, places=10)
            self.assertEqual(bounds.solves, 5)

    def test_lanczos_solver(self):
        """Test the sparse solver gives knots on the dense curve"""
        problem = UncertaintyProblem.from_graph(
            geometric(40, 0.35, seed=5), 0,
        )
        with override_settings(GRAPH_UNCERTAINTY={'DENSE_THRESHOLD': 20}):
            bounds = sandwich(problem, epsilon=1e-4)

        self.assertLessEqual(bounds.gap, 1e-4)
        for knot in bounds.knots:
            if not knot.is_endpoint:
                q, _ = problem.q_alpha(knot.alpha)
                self.assertAlmostEqual(knot.q, q, delta=1e-7)


class CurvePropertyTests(SimpleTestCase):
    """Test convexity and the supporting lines on a random graph"""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.problem = UncertaintyProblem.from_graph(
            geometric(30, 0.4, seed=3), 0,
        )
        cls.bounds = sandwich(cls.problem, epsilon=1e-4)
        cls.finite = [k for k in cls.bounds.knots if not k.is_endpoint]

    def test_chord_slopes_increase(self):
        """Test the knots form a convex polyline"""
        self.assertTrue(np.all(np.diff(self.bounds.chord_slopes()) >= -1e-7))

    def test_alpha_increases_with_s(self):
        """Test supporting slopes increase along the curve"""
        alphas = [knot.alpha for knot in self.finite]

        self.assertTrue(np.all(np.diff(alphas) >= -1e-9))

    def test_knot_identity(self):
        """Test g - alpha s = q at every finite knot"""
        for knot in self.finite:
            self.assertAlmostEqual(knot.g - knot.alpha * knot.s, knot.q,
                                   delta=1e-8)

    def test_random_vectors_above_bounds(self):
        """Test 1000 random unit vectors lie above every supporting line"""
        rng = np.random.default_rng(11)
        points = []
        for _ in range(1000):
            x = rng.standard_normal(self.problem.dimension)
            points.append(self.problem.spreads(x / np.linalg.norm(x)))
        s, g = np.array(points).T

        self.assertTrue(np.all(self.bounds.lower_at(s) <= g + 1e-9))
        for knot in self.finite:
            slack = 1e-9 * max(1.0, abs(knot.alpha))
            self.assertTrue(np.all(g - knot.alpha * s >= knot.q - slack))

    def test_upper_through_knots(self):
        """Test the upper bound passes through every knot"""
        for knot in self.bounds.knots:
            self.assertAlmostEqual(self.bounds.upper_at(knot.s), knot.g,
                                   places=12)

    def test_lower_through_impulse(self):
        """Test the lower bound touches (1, 0)"""
        self.assertAlmostEqual(self.bounds.lower_at(1.0), 0.0, delta=1e-9)

    def test_point_query_width(self):
        """Test point queries on curved segments bracket within epsilon"""
        for s in (0.5, 0.75 * self.problem.lambda_max):
            with self.subTest(s=s):
                estimate = point_query(self.problem, s, epsilon=1e-4)

                i = estimate.bounds.segment_index(s)
                self.assertFalse(estimate.bounds.exact[i])
                self.assertLessEqual(estimate.width, 1e-4)
                self.assertLessEqual(estimate.lower,
                                     self.bounds.upper_at(s) + 1e-9)
                self.assertLessEqual(self.bounds.lower_at(s),
                                     estimate.upper + 1e-9)


class PointQueryTests(SimpleTestCase):
    """Test point_query"""

    def test_left_end(self):
        """Test s = 0 returns f_1 exactly"""
        problem = UncertaintyProblem.from_graph(complete(4), 0)

        estimate = point_query(problem, 0.0)

        self.assertEqual(estimate.lower, estimate.upper)
        self.assertAlmostEqual(estimate.upper, 0.75, delta=1e-10)
        np.testing.assert_allclose(np.abs(estimate.vector), np.full(4, 0.5),
                                   atol=1e-10)

    def test_impulse(self):
        """Test s = 1 returns the impulse at the center"""
        problem = UncertaintyProblem.from_graph(complete(4), 0)

        estimate = point_query(problem, 1.0)

        self.assertAlmostEqual(estimate.lower, 0.0, delta=1e-10)
        self.assertAlmostEqual(estimate.upper, 0.0, delta=1e-10)
        np.testing.assert_allclose(np.abs(estimate.vector), np.eye(4)[0],
                                   atol=1e-10)

    def test_interior(self):
        """Test star(10) at s = 1/2 is bracketed to within epsilon"""
        problem = UncertaintyProblem.from_graph(star(10), 0)

        estimate = point_query(problem, 0.5, epsilon=1e-6)

        gamma = star_gamma(0.5)
        self.assertLessEqual(estimate.lower, gamma + 1e-12)
        self.assertGreaterEqual(estimate.upper, gamma - 1e-12)
        self.assertLessEqual(estimate.width, 1e-6)
        self.assertAlmostEqual(estimate.achieved_s, 0.5, delta=1e-6)
        self.assertLessEqual(estimate.achieved_g, estimate.upper + 1e-6)

    def test_inside_eigenspace_segment(self):
        """Test a query on a straight piece mixes its two end vectors"""
        estimate = point_query(diagonal_problem(), 1.5)

        self.assertEqual(estimate.lower, 0.0)
        self.assertEqual(estimate.upper, 0.0)
        self.assertAlmostEqual(estimate.achieved_s, 1.5, places=10)
        self.assertAlmostEqual(estimate.achieved_g, 0.0, places=12)
        self.assertAlmostEqual(np.linalg.norm(estimate.vector), 1.0)

    def test_outside_domain(self):
        """Test s outside [0, lambda_N] is rejected"""
        problem = UncertaintyProblem.from_graph(complete(4), 0)

        for s in (-0.1, 1.5):
            with self.assertRaises(DomainError):
                point_query(problem, s)


@tag('slow')
class ConvergenceRateTests(SimpleTestCase):
    """Test the gap after n solves against 9 W / (n - 2)^2"""

    def check_rate(self, g):
        problem = UncertaintyProblem.from_graph(g, 0)
        gaps = {}
        for n in (16, 32, 64, 128):
            bounds = refine_to_gap(problem, epsilon=1e-14,
                                   max_refinements=n - 2)
            gaps[n] = bounds.gap

            self.assertLessEqual(gaps[n], gap_bound(problem.width,
                                                    bounds.solves))

        # at least 3.5x per doubling of the solves, on average
        self.assertTrue(math.isfinite(gaps[128]))
        self.assertGreaterEqual(gaps[16], 3.5 ** 3 * gaps[128])

    def test_geometric(self):
        """Test a random geometric graph on 500 vertices"""
        self.check_rate(geometric(500, 0.1, seed=7))

    def test_smallworld(self):
        """Test a small-world graph on 500 vertices"""
        self.check_rate(smallworld(500, 4, 0.1, seed=7))
