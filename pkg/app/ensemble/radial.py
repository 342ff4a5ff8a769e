"""
Expected uncertainty curve of Erdos-Renyi graphs G(N, p).

Signals that depend only on the distance from the center reduce the
problem to a vector y indexed by distance 0..d_max. Expected squared
norm, graph spread and spectral spread are quadratic forms in y with
matrices H_a, P2_a and L_a, and the curve for s <= 1 follows from the
generalized pencil (P2_a - alpha L_a) y = tau H_a y.
"""
from dataclasses import dataclass, field
from functools import cached_property
import logging
import math

import numpy as np

from core.conf import curve_settings
from core.exceptions import DistanceDistributionError, InvalidParameterError
from curve.problem import UncertaintyProblem
from curve.sandwich import sandwich
from spectral.operators import SymOp

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DistanceDistribution:
    """f[d - 1] is the probability that a random non-center vertex is at
    distance d from the center, for d = 1..d_max."""
    n: int
    p: float
    f: np.ndarray = field(repr=False)

    @property
    def d_max(self):
        return int(self.f.size)

    @property
    def tail(self):
        return float(1.0 - self.f.sum())


def distance_distribution(n, p):
    """Branching recursion f_{d+1} = (1 - sum f) (1 - (1-p)^((N-1) f_d))"""
    if n < 2:
        raise InvalidParameterError('distance distribution needs N >= 2')
    if not 0 < p < 1:
        raise InvalidParameterError('distance distribution needs 0 < p < 1')
    tail_tol = curve_settings.ER_TAIL_TOL
    max_distance = curve_settings.ER_MAX_DISTANCE

    f = [p]
    total = p
    log_miss = math.log1p(-p)
    while 1.0 - total >= tail_tol:
        if len(f) >= max_distance:
            raise DistanceDistributionError(
                f'tail {1.0 - total:.3e} still above {tail_tol:g} after '
                f'{max_distance} distances; G({n}, {p}) is too sparse'
            )
        reached = -math.expm1((n - 1) * f[-1] * log_miss)
        step = (1.0 - total) * reached
        f.append(step)
        total += step

    values = np.array(f)
    values.setflags(write=False)
    return DistanceDistribution(n, p, values)


def edge_counts(dd):
    """Expected edges M_{k,k+1} between distance shells, k = 0..d_max-1"""
    n, p = dd.n, dd.p
    counts = np.zeros(dd.d_max)
    counts[0] = (n - 1) * p
    for k in range(1, dd.d_max):
        f_k = dd.f[k - 1]
        counts[k] = (n - 1) ** 2 * p * f_k * (1 - f_k) - counts[k - 1]
        if counts[k] < 0:
            logger.warning(
                'M_{%d,%d} = %.3g below zero for G(%d, %g), clamped to 0',
                k, k + 1, counts[k], n, p,
            )
            counts[k] = 0.0
    return counts


@dataclass(frozen=True, eq=False)
class ReducedModel:
    """Quadratic forms of the radial model, dimension d_max + 1"""
    n: int
    p: float
    h_diag: np.ndarray = field(repr=False)
    p2_diag: np.ndarray = field(repr=False)
    l_a: np.ndarray = field(repr=False)
    m_counts: np.ndarray = field(repr=False)

    @property
    def dimension(self):
        return self.h_diag.size

    @property
    def d_max(self):
        return self.dimension - 1

    @property
    def h_a(self):
        return np.diag(self.h_diag)

    @property
    def p2_a(self):
        return np.diag(self.p2_diag)

    def expected_spreads(self, y):
        """(E||x||^2, E[x^T P^2 x], E[x^T L x]) of the radial profile y"""
        y = np.asarray(y, dtype=np.float64)
        return (
            float(self.h_diag @ y ** 2),
            float(self.p2_diag @ y ** 2),
            float(y @ self.l_a @ y),
        )


def reduced_model(dd):
    """H_a, P2_a and the tridiagonal L_a of a distance distribution"""
    counts = edge_counts(dd)
    shells = (dd.n - 1) * dd.f
    distance = np.arange(1, dd.d_max + 1)
    h_diag = np.concatenate([[1.0], shells])
    p2_diag = np.concatenate([[0.0], distance ** 2 * shells])

    weights = counts / ((dd.n - 1) * dd.p)
    l_a = np.zeros((dd.d_max + 1, dd.d_max + 1))
    for k, w in enumerate(weights):
        l_a[k, k] += w
        l_a[k + 1, k + 1] += w
        l_a[k, k + 1] -= w
        l_a[k + 1, k] -= w
    return ReducedModel(dd.n, dd.p, h_diag, p2_diag, l_a, counts)


class ReducedProblem(UncertaintyProblem):
    """The radial problem in the variable z = H_a^{1/2} y.

    Its domain stops at s = 1, the spectral spread of the radial
    impulse y = e_0, which is the knot of alpha = 0.
    """

    def __init__(self, model, tol=None):
        scale = 1.0 / np.sqrt(model.h_diag)
        super().__init__(
            SymOp.from_matrix(model.l_a).congruence(scale),
            SymOp.diagonal(model.p2_diag / model.h_diag),
            np.sqrt(model.h_diag),
            tol=tol,
        )
        self.model = model

    @cached_property
    def right_knot(self):
        return self.impulse_knot

    def profile(self, knot):
        """Radial profile y with y^T H_a y = 1 of a knot"""
        return knot.vector / np.sqrt(self.model.h_diag)


def expected_curve(rm, epsilon=None, max_refinements=None, rounds=None):
    """Sandwich bounds of the expected curve on s in [0, 1]"""
    return sandwich(
        ReducedProblem(rm),
        epsilon=epsilon,
        max_refinements=max_refinements,
        rounds=rounds,
    )
