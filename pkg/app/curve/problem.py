"""
The uncertainty curve problem for one center vertex.

For every alpha the pencil M(alpha) = P^2 - alpha L gives a supporting
line g - alpha s = q(alpha) of the curve, with q(alpha) the smallest
eigenvalue of M(alpha). Every unit vector of the matching eigenspace
S(alpha) lands on the curve.
"""
from dataclasses import dataclass, field
from functools import cached_property
import logging
import math

import numpy as np

from core.distances import METRICS
from core.exceptions import DisconnectedGraphError, GraphError
from core.graphs import is_connected
from spectral.eigen import LARGEST, SMALLEST, dense_eigh, extreme_eigenpair
from spectral.operators import SymOp, dc_vector, normalized_laplacian

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CurveKnot:
    """Point (s, g) on the curve, reached by a unit vector.

    ``alpha`` is the slope of the supporting line through the knot;
    it is -inf / +inf at the two ends of the domain, where ``q`` is nan.
    """
    alpha: float
    s: float
    g: float
    q: float
    vector: np.ndarray = field(repr=False)

    @property
    def is_endpoint(self):
        return not math.isfinite(self.alpha)

    def line_at(self, s):
        """Value of the supporting line at s"""
        return self.q + self.alpha * s


def pencil(l, p2, alpha):
    """M(alpha) = P^2 - alpha L"""
    if l.dimension != p2.dimension:
        raise ValueError('L and P^2 must have the same dimension')
    return p2.combine(l, -alpha)


def width(lambda_max, eccentricity_squared):
    """W = sqrt(lambda_N^2 + E^4)"""
    return math.hypot(lambda_max, eccentricity_squared)


def sufficient_solves(w, epsilon):
    """Eigenvalue solves that guarantee a Hausdorff gap of at most epsilon"""
    return max(4, math.ceil(math.sqrt(9 * w / epsilon) + 2))


def gap_bound(w, n):
    """Largest gap possible after n eigenvalue solves"""
    if n <= 2:
        return math.inf
    return 9 * w / (n - 2) ** 2


class UncertaintyProblem:
    """Operators L and P^2 of one curve, with the solves that sample it"""

    def __init__(self, l, p2, null_vector, tol=None, graph=None,
                 distances=None):
        if l.dimension != p2.dimension:
            raise ValueError('L and P^2 must have the same dimension')
        if l.dimension < 2:
            raise GraphError('the curve needs at least two vertices')
        self.l = l
        self.p2 = p2
        self.null_vector = np.asarray(null_vector, dtype=np.float64)
        self.null_vector = self.null_vector / np.linalg.norm(self.null_vector)
        self.tol = tol
        self.graph = graph
        self.distances = distances

    @classmethod
    def from_graph(cls, g, u0, metric='geodesic', tol=None):
        """Curve of a connected graph about center u0"""
        if not is_connected(g):
            raise DisconnectedGraphError(f'{g} is not connected')
        distances = METRICS[metric] if isinstance(metric, str) else metric
        d = distances(g, u0)
        return cls(
            normalized_laplacian(g),
            SymOp.diagonal(d.squared),
            dc_vector(g),
            tol=tol,
            graph=g,
            distances=d,
        )

    @property
    def dimension(self):
        return self.l.dimension

    @property
    def center(self):
        return None if self.distances is None else self.distances.center

    @property
    def eccentricity_squared(self):
        return float(self.p2.diag.max())

    @property
    def lambda_max(self):
        return self.right_knot.s

    @property
    def width(self):
        return width(self.lambda_max, self.eccentricity_squared)

    def pencil(self, alpha):
        return pencil(self.l, self.p2, alpha)

    def q_alpha(self, alpha):
        """q(alpha) and an orthonormal basis of S(alpha)"""
        pair = extreme_eigenpair(self.pencil(alpha), SMALLEST, self.tol)
        return pair.value, pair.basis

    def spreads(self, x):
        """(s, g) of a unit vector"""
        return self.l.quad(x), self.p2.quad(x)

    def knot(self, alpha, vector, q=None):
        vector = vector / np.linalg.norm(vector)
        s, g = self.spreads(vector)
        if q is None:
            q = g - alpha * s if math.isfinite(alpha) else math.nan
        return CurveKnot(float(alpha), s, g, float(q), vector)

    def curve_point(self, alpha):
        """Knots of the curve with supporting slope alpha.

        One knot when S(alpha) is one-dimensional. Otherwise the two
        extreme knots h-(alpha) and h+(alpha), ordered by s; the straight
        segment between them belongs to the curve.
        """
        q, basis = self.q_alpha(alpha)
        if basis.shape[1] == 1:
            return [self.knot(alpha, basis[:, 0], q)]

        # extremes of s = v^T L v over unit vectors of S(alpha)
        reduced = basis.T @ (self.l.matrix @ basis)
        values, coords = dense_eigh((reduced + reduced.T) / 2)
        low = self.knot(alpha, basis @ coords[:, 0], q)
        high = self.knot(alpha, basis @ coords[:, -1], q)
        if values[-1] - values[0] <= 1e-12 * max(1.0, abs(values[-1])):
            return [low]
        logger.debug('S(%.6g) has dimension %d, s in [%.6g, %.6g]',
                     alpha, basis.shape[1], low.s, high.s)
        return [low, high]

    @cached_property
    def left_knot(self):
        """(0, f_1^T P^2 f_1) from the null vector of L"""
        return self.knot(-math.inf, self.null_vector)

    @cached_property
    def right_knot(self):
        """(lambda_N, min g over the top eigenspace of L)"""
        pair = extreme_eigenpair(self.l, LARGEST, self.tol)
        basis = pair.basis
        if basis.shape[1] == 1:
            vector = basis[:, 0]
        else:
            reduced = basis.T @ (self.p2.matrix @ basis)
            _, coords = dense_eigh((reduced + reduced.T) / 2)
            vector = basis @ coords[:, 0]
        return self.knot(math.inf, vector)

    @cached_property
    def impulse_knot(self):
        """The knot of alpha = 0, (1, 0) for a graph"""
        return self.curve_point(0.0)[0]
