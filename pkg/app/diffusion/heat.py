"""
Heat diffusion x(t) = exp(-t L) delta_u0 and the s-g trace it follows.
"""
from dataclasses import dataclass, field
import logging

import numpy as np
from scipy.sparse.linalg import expm_multiply

from core.conf import curve_settings
from core.exceptions import NumericalError, SignalError
from spectral.eigen import LARGEST, extreme_eigenpair, full_spectrum
from spectral.spreads import SpreadPoint

logger = logging.getLogger(__name__)

# doublings of t allowed while searching for the end of the trace
MAX_DOUBLINGS = 200


def _impulse(n, u0):
    if not 0 <= u0 < n:
        raise SignalError(f'center {u0} outside 0..{n - 1}')
    x = np.zeros(n)
    x[u0] = 1.0
    return x


def diffuse(l, u0, t, spectrum=None):
    """x(t) for the impulse at u0.

    Small operators use their eigendecomposition; larger ones use
    scipy's truncated-Taylor action of the matrix exponential.
    """
    if t < 0:
        raise ValueError("diffusion time must be nonnegative")
    delta = _impulse(l.dimension, u0)
    if spectrum is None and l.dimension <= curve_settings.DENSE_THRESHOLD:
        spectrum = full_spectrum(l)
    if spectrum is not None:
        coefficients = spectrum.vectors[u0, :]
        return spectrum.vectors @ (np.exp(-t * spectrum.values) *
                                   coefficients)
    if t == 0:
        return delta
    return expm_multiply(-t * l.matrix.tocsc(), delta)


@dataclass(frozen=True)
class DiffusionSampling:
    """Time grid choice: explicit ``times`` or a logarithmic grid of
    ``points`` times that runs until s(t) drops below ``s_floor``."""
    points: int = None
    s_floor: float = None
    times: tuple = None


@dataclass(frozen=True, eq=False)
class DiffusionTrace:
    center: int
    times: np.ndarray
    states: np.ndarray = field(repr=False)
    s: np.ndarray = field(repr=False)
    g: np.ndarray = field(repr=False)

    @property
    def points(self):
        return [SpreadPoint(float(s), float(g))
                for s, g in zip(self.s, self.g)]

    def as_array(self):
        """(T, 2) array of (s, g) in order of decreasing s"""
        return np.column_stack([self.s, self.g])


def _spreads(l, p2, x):
    energy = float(x @ x)
    if energy == 0.0:
        raise NumericalError('diffusion state vanished')
    return l.quad(x) / energy, p2.quad(x) / energy


def _time_grid(l, p2, u0, sampling, spectrum):
    points = sampling.points or curve_settings.DIFFUSION_POINTS
    s_floor = sampling.s_floor or curve_settings.DIFFUSION_S_FLOOR
    if spectrum is not None:
        lambda_max = spectrum.lambda_max
    else:
        lambda_max = extreme_eigenpair(l, LARGEST).value
    t_min = curve_settings.DIFFUSION_T_MIN_SCALE / lambda_max

    t_max = t_min
    for _ in range(MAX_DOUBLINGS):
        s, _ = _spreads(l, p2, diffuse(l, u0, t_max, spectrum))
        if s < s_floor:
            break
        t_max *= 2
    else:
        raise NumericalError(f'spectral spread stayed above {s_floor:g}')
    return np.concatenate([[0.0], np.geomspace(t_min, t_max, points - 1)])


def diffusion_curve(l, p2, u0, sampling=None):
    """Spreads of x(t) on a time grid, ordered by increasing t"""
    sampling = sampling or DiffusionSampling()
    spectrum = None
    if l.dimension <= curve_settings.DENSE_THRESHOLD:
        spectrum = full_spectrum(l)

    if sampling.times is not None:
        times = np.unique(np.asarray(sampling.times, dtype=np.float64))
    else:
        times = _time_grid(l, p2, u0, sampling, spectrum)

    states = np.array([diffuse(l, u0, t, spectrum) for t in times])
    spreads = np.array([_spreads(l, p2, x) for x in states])
    logger.debug('diffusion trace with %d points, s down to %.3g',
                 times.size, spreads[-1, 0])
    return DiffusionTrace(u0, times, states, spreads[:, 0], spreads[:, 1])
