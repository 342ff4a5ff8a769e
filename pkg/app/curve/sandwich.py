"""
Sandwich approximation of the uncertainty curve.

Each refinement takes a segment between two knots, solves the pencil at
the slope of its chord and inserts the resulting knot(s). The chord stays
an upper bound and the supporting lines give the lower bound.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import heapq
import itertools
import logging
import math

import numpy as np
from scipy.optimize import brentq

from core.conf import curve_settings
from core.exceptions import DomainError, GraphError, NumericalError
from curve.bounds import CurveBounds

logger = logging.getLogger(__name__)

# knots closer than this (relative to the domain) count as the same point
KNOT_RESOLUTION = 1e-13


@dataclass
class _Refinement:
    """Outcome of solving the pencil for one segment"""
    knots: list = field(default_factory=list)
    exact: bool = False


def _chord_alpha(left, right):
    return (right.g - left.g) / (right.s - left.s)


def _refine(problem, left, right):
    """Solve at the chord slope of (left, right) and classify the result"""
    scale = max(1.0, right.s - left.s)
    if right.s - left.s <= KNOT_RESOLUTION * scale:
        return _Refinement(exact=True)

    alpha = _chord_alpha(left, right)
    found = problem.curve_point(alpha)
    q = found[0].q

    # both ends already on the supporting line: the chord is on the curve
    magnitude = max(1.0, abs(q), abs(left.g), abs(alpha * left.s))
    if abs(left.g - alpha * left.s - q) <= 1e-12 * magnitude:
        return _Refinement(exact=True)

    resolution = KNOT_RESOLUTION * max(1.0, abs(problem.lambda_max))
    inside = [
        knot for knot in found
        if left.s + resolution < knot.s < right.s - resolution
    ]
    if not inside:
        return _Refinement(exact=True)
    return _Refinement(knots=inside, exact=len(found) == 2 and
                       len(inside) == 2)


def _initial_bounds(problem):
    return CurveBounds([problem.left_knot, problem.right_knot], solves=2)


def _check(problem):
    if problem.graph is not None and problem.dimension < 3:
        raise GraphError('the sandwich needs a connected graph with N >= 3')


def refine_rounds(problem, rounds, workers=None):
    """Refine every open segment once per round.

    Round k adds up to 2^(k-1) knots, so 8 rounds use 257 solves on a
    curve without eigenspace segments.
    """
    _check(problem)
    workers = workers or curve_settings.WORKERS
    bounds = _initial_bounds(problem)
    bounds.history.append((bounds.solves, bounds.gap))

    with ThreadPoolExecutor(max_workers=workers) as pool:
        for round_no in range(rounds):
            open_segments = [
                i for i, exact in enumerate(bounds.exact) if not exact
            ]
            if not open_segments:
                break
            results = list(pool.map(
                lambda i: _refine(
                    problem, bounds.knots[i], bounds.knots[i + 1]
                ),
                open_segments,
            ))
            bounds.solves += len(open_segments)
            # insert right to left so earlier indices stay valid
            for i, result in reversed(list(zip(open_segments, results))):
                if result.knots:
                    bounds.insert(i, result.knots, result.exact)
                else:
                    bounds.exact[i] = result.exact
            bounds.history.append((bounds.solves, bounds.gap))
            logger.debug('round %d: %d knots, gap %.3e', round_no + 1,
                         len(bounds.knots), bounds.history[-1][1])
    return bounds


def refine_to_gap(problem, epsilon=None, max_refinements=None):
    """Refine the segment with the largest gap first.

    Stops once every segment gap is at most ``epsilon`` or after
    ``max_refinements`` solves, whichever comes first.
    """
    _check(problem)
    if epsilon is None:
        epsilon = curve_settings.EPSILON_SCALE * problem.width
    if epsilon <= 0:
        raise ValueError('epsilon must be positive')

    bounds = _initial_bounds(problem)
    counter = itertools.count()
    following = {}
    heap = []

    def push(left, right, exact=False):
        following[id(left)] = right
        if not exact:
            i = bounds.knots.index(left)
            heapq.heappush(
                heap, (-bounds.segment_gap(i), next(counter), left, right)
            )

    push(bounds.knots[0], bounds.knots[1])
    refinements = 0
    while heap:
        neg_gap, _, left, right = heapq.heappop(heap)
        if following.get(id(left)) is not right:
            continue
        if -neg_gap <= epsilon:
            break
        if max_refinements is not None and refinements >= max_refinements:
            break

        i = bounds.knots.index(left)
        result = _refine(problem, left, right)
        refinements += 1
        bounds.solves += 1
        if not result.knots:
            bounds.exact[i] = True
            continue
        bounds.insert(i, result.knots, result.exact)
        chain = [left] + result.knots + [right]
        for j, (a, b) in enumerate(zip(chain[:-1], chain[1:])):
            push(a, b, exact=bounds.exact[i + j])

    logger.debug('%d refinements, %d knots', refinements, len(bounds.knots))
    return bounds


def sandwich(problem, epsilon=None, max_refinements=None, rounds=None,
             workers=None):
    """Upper and lower bounds of the curve.

    With ``rounds`` every open segment is refined once per round;
    otherwise segments are refined largest gap first until the gap is at
    most ``epsilon`` (default EPSILON_SCALE * W) or ``max_refinements``
    solves have been spent.
    """
    if rounds is not None:
        return refine_rounds(problem, rounds, workers)
    return refine_to_gap(problem, epsilon, max_refinements)


@dataclass(frozen=True, eq=False)
class PointEstimate:
    """Bracket [lower, upper] of gamma(s) and a vector near the curve"""
    s: float
    lower: float
    upper: float
    vector: np.ndarray = field(repr=False)
    achieved_s: float
    achieved_g: float
    bounds: CurveBounds = field(repr=False)

    @property
    def width(self):
        return self.upper - self.lower


def _interpolate(problem, left, right, s):
    """Unit vector of span{left, right} with spectral spread exactly s"""
    def spread_error(theta):
        x = math.cos(theta) * right.vector + math.sin(theta) * left.vector
        return problem.l.quad(x) / float(x @ x) - s

    theta = brentq(spread_error, 0.0, math.pi / 2, xtol=1e-14)
    x = math.cos(theta) * right.vector + math.sin(theta) * left.vector
    return x / np.linalg.norm(x)


def point_query(problem, s, epsilon=None, max_refinements=500):
    """gamma(s) to within epsilon, refining only the segment holding s"""
    low, high = problem.left_knot.s, problem.right_knot.s
    if not low - 1e-12 <= s <= high + 1e-12:
        raise DomainError(f's = {s} outside [{low:.6g}, {high:.6g}]')
    if epsilon is None:
        epsilon = curve_settings.EPSILON_SCALE * problem.width
    s = min(max(s, low), high)

    knots = [problem.left_knot, problem.right_knot]
    impulse = problem.impulse_knot
    if low < impulse.s < high and all(
            abs(impulse.s - knot.s) > KNOT_RESOLUTION for knot in knots):
        knots.insert(1, impulse)
    bounds = CurveBounds(knots, solves=len(knots))

    for _ in range(max_refinements):
        for knot in bounds.knots:
            if abs(knot.s - s) <= KNOT_RESOLUTION:
                return PointEstimate(s, knot.g, knot.g, knot.vector,
                                     knot.s, knot.g, bounds)

        i = bounds.segment_index(s)
        left, right = bounds.knots[i], bounds.knots[i + 1]
        if bounds.exact[i]:
            x = _interpolate(problem, left, right, s)
            s_x, g_x = problem.spreads(x)
            value = float(bounds.upper_at(s))
            return PointEstimate(s, value, value, x, s_x, g_x, bounds)

        upper = float(bounds.upper_at(s))
        lower = float(bounds.lower_at(s))
        best = left if left.g <= right.g else right
        if upper - lower <= epsilon and abs(best.s - s) <= epsilon:
            return PointEstimate(s, lower, upper, best.vector,
                                 best.s, best.g, bounds)

        result = _refine(problem, left, right)
        bounds.solves += 1
        if result.knots:
            bounds.insert(i, result.knots, result.exact)
        else:
            bounds.exact[i] = True

    raise NumericalError(
        f'point query at s = {s} did not settle in {max_refinements} '
        'refinements'
    )
