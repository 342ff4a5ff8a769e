"""
Curvature of the uncertainty curve and of the diffusion trace at s = 1.
"""
from dataclasses import dataclass

import numpy as np

from core.distances import geodesic_distances
from core.exceptions import InsufficientPointsError


def curvature_comparison(g, u0, distances=None):
    """Second derivatives (gamma'', eta'') at s = 1.

    gamma'' = deg u0 / (2 sum_{v~u0} 1 / (d(v,u0)^2 deg v))
    eta''   = deg u0 / 2 * sum d^2 / deg v / (sum 1 / deg v)^2
    They agree when every neighbor of u0 is at the same distance.
    """
    d = distances or geodesic_distances(g, u0)
    neighbors = g.neighbors(u0)
    deg_u0 = float(g.degrees[u0])
    deg_v = g.degrees[neighbors].astype(np.float64)
    dist_v = d.dist[neighbors]

    gamma_second = deg_u0 / (2 * np.sum(1 / (dist_v ** 2 * deg_v)))
    eta_second = deg_u0 / 2 * np.sum(dist_v ** 2 / deg_v) / np.sum(
        1 / deg_v) ** 2
    return float(gamma_second), float(eta_second)


@dataclass(frozen=True)
class DerivativeEstimate:
    first: float
    second: float


def empirical_second_derivative(points, at=1.0, window=None):
    """Quadratic through the three (s, g) points nearest to s = ``at``"""
    points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    if window is not None:
        points = points[np.abs(points[:, 0] - at) <= window]
    _, unique = np.unique(points[:, 0], return_index=True)
    points = points[unique]
    if points.shape[0] < 3:
        raise InsufficientPointsError(
            f'need three distinct points near s = {at}, '
            f'have {points.shape[0]}'
        )
    nearest = points[np.argsort(np.abs(points[:, 0] - at))[:3]]
    a, b, _ = np.polyfit(nearest[:, 0] - at, nearest[:, 1], 2)
    return DerivativeEstimate(first=float(b), second=float(2 * a))


def impulse_neighbourhood(problem, step=1e-3):
    """Knots for alpha in {-2h, -h, 0, h, 2h} around the impulse point"""
    knots = []
    for alpha in step * np.arange(-2, 3):
        knots.extend(problem.curve_point(float(alpha)))
    return np.array([[knot.s, knot.g] for knot in knots])
