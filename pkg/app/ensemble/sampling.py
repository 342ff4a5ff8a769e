"""
Monte-Carlo statistics over sampled Erdos-Renyi graphs, used to check
the radial approximation.
"""
from dataclasses import dataclass, field
import logging

import numpy as np
from scipy.sparse import csgraph

from core.generators import er
from core.graphs import is_connected
from curve.problem import UncertaintyProblem
from curve.sandwich import sandwich

logger = logging.getLogger(__name__)


def _seeds(seed, samples):
    return np.random.default_rng(seed).integers(2 ** 32, size=samples)


@dataclass(frozen=True, eq=False)
class ShellStatistics:
    """Mean and standard error per distance d = 1.. and per shell pair"""
    f_mean: np.ndarray = field(repr=False)
    f_sem: np.ndarray = field(repr=False)
    m_mean: np.ndarray = field(repr=False)
    m_sem: np.ndarray = field(repr=False)
    samples: int = 0


def _mean_sem(rows):
    rows = np.asarray(rows)
    sem = rows.std(axis=0, ddof=1) / np.sqrt(rows.shape[0])
    return rows.mean(axis=0), sem


def shell_statistics(n, p, samples, seed=None, depth=None):
    """Distance fractions f_d and edge-layer counts M_{k,k+1} from
    breadth-first searches rooted at vertex 0 of sampled graphs."""
    fractions, layers = [], []
    for sample_seed in _seeds(seed, samples):
        g = er(n, p, seed=int(sample_seed))
        dist = csgraph.shortest_path(
            g.adjacency, directed=False, unweighted=True, indices=0
        )
        reach = np.isfinite(dist)
        hops = np.where(reach, dist, -1).astype(np.int64)
        top = int(hops.max())
        fractions.append(np.bincount(hops[reach], minlength=top + 1)[1:]
                         / (n - 1))

        u, v = hops[g.edges[:, 0]], hops[g.edges[:, 1]]
        near = np.minimum(u, v)
        crossing = (np.abs(u - v) == 1) & (near >= 0)
        layers.append(np.bincount(near[crossing], minlength=top))

    width = depth or max(len(row) for row in fractions)
    f_mean, f_sem = _mean_sem([_pad(row, width) for row in fractions])
    m_mean, m_sem = _mean_sem([_pad(row, width) for row in layers])
    return ShellStatistics(f_mean, f_sem, m_mean, m_sem, samples)


def _pad(row, width):
    out = np.zeros(width)
    out[:min(width, len(row))] = row[:width]
    return out


@dataclass(frozen=True, eq=False)
class EnsembleCurve:
    """Empirical mean and standard deviation of the curve on a grid"""
    grid: np.ndarray
    mean: np.ndarray
    std: np.ndarray
    samples: int


def ensemble_curve(n, p, samples, grid, seed=None, epsilon=None,
                   max_refinements=None):
    """Curve of vertex 0 over connected G(n, p) samples, read off the
    upper bound of each sampled curve at the grid abscissas."""
    grid = np.asarray(grid, dtype=np.float64)
    rows = []
    rng = np.random.default_rng(seed)
    while len(rows) < samples:
        g = er(n, p, seed=int(rng.integers(2 ** 32)))
        if not is_connected(g):
            logger.info('skipping disconnected G(%d, %g) sample', n, p)
            continue
        bounds = sandwich(
            UncertaintyProblem.from_graph(g, 0),
            epsilon=epsilon,
            max_refinements=max_refinements,
        )
        rows.append(bounds.upper_at(grid))
    rows = np.array(rows)
    return EnsembleCurve(grid, rows.mean(axis=0), rows.std(axis=0, ddof=1),
                         samples)
