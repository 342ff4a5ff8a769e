"""
Multi-start constrained minimization of the graph spread.

An independent check on small graphs: minimize x^T P^2 x subject to
||x|| = 1 and x^T L x = s from random starting points.
"""
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize


@dataclass(frozen=True, eq=False)
class Minimum:
    g: float
    s: float
    vector: np.ndarray = field(repr=False)


def multistart_minimum(problem, s, starts=100, seed=None,
                       feasibility=1e-9):
    """Best feasible local minimum found from ``starts`` random points.

    Returns None if no run satisfied both constraints to ``feasibility``.
    The achieved spectral spread is reported, so callers can compare
    against the lower bound at exactly that abscissa.
    """
    l = problem.l.dense()
    p2 = problem.p2.dense()
    rng = np.random.default_rng(seed)
    constraints = (
        {'type': 'eq', 'fun': lambda x: x @ x - 1.0,
         'jac': lambda x: 2 * x},
        {'type': 'eq', 'fun': lambda x: x @ l @ x - s,
         'jac': lambda x: 2 * l @ x},
    )

    best = None
    for _ in range(starts):
        x0 = rng.standard_normal(problem.dimension)
        x0 /= np.linalg.norm(x0)
        result = minimize(
            lambda x: x @ p2 @ x,
            x0,
            jac=lambda x: 2 * p2 @ x,
            constraints=constraints,
            method='SLSQP',
            options={'maxiter': 500, 'ftol': 1e-14},
        )
        x = result.x
        norm2 = float(x @ x)
        if abs(norm2 - 1.0) > feasibility:
            continue
        achieved = float(x @ l @ x) / norm2
        if abs(achieved - s) > feasibility:
            continue
        g = float(x @ p2 @ x) / norm2
        if best is None or g < best.g:
            best = Minimum(g, achieved, x / np.sqrt(norm2))
    return best
