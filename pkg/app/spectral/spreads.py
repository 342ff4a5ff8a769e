"""
Graph spread, spectral spread and normalized variation of a signal.
"""
from dataclasses import dataclass

import numpy as np

from core.distances import METRICS
from core.exceptions import SignalError


@dataclass(frozen=True)
class SpreadPoint:
    """Coordinates (spectral spread, graph spread) in the s-g plane"""
    s: float
    g: float


def _energy(x, dimension):
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (dimension,):
        raise SignalError(
            f'signal shape {x.shape} does not match {dimension} vertices'
        )
    energy = float(x @ x)
    if energy == 0.0:
        raise SignalError('spreads are undefined for the zero signal')
    return x, energy


def graph_spread(x, d):
    """sum_v d(u0, v)^2 x(v)^2 / ||x||^2"""
    x, energy = _energy(x, d.dist.size)
    return float(d.squared @ (x * x)) / energy


def spectral_spread(x, l):
    """x^T L x / ||x||^2"""
    x, energy = _energy(x, l.dimension)
    return l.quad(x) / energy


def normalized_variation(x, g):
    """Edge-sum form of the spectral spread"""
    x, energy = _energy(x, g.n_vertices)
    scaled = x / np.sqrt(g.degrees)
    u, v = g.edges[:, 0], g.edges[:, 1]
    return float(np.sum((scaled[u] - scaled[v]) ** 2)) / energy


def spread_point(x, d, l):
    return SpreadPoint(spectral_spread(x, l), graph_spread(x, d))


def global_graph_spread(x, g, metric='geodesic'):
    """Minimum graph spread over all centers and the lowest minimizing id.

    ``metric`` is a name from core.distances.METRICS or a callable
    ``(graph, center) -> DistanceVector``.
    """
    distances = METRICS[metric] if isinstance(metric, str) else metric
    x, _ = _energy(x, g.n_vertices)
    spreads = np.array([
        graph_spread(x, distances(g, center))
        for center in range(g.n_vertices)
    ])
    best = int(np.argmin(spreads))
    return float(spreads[best]), best
