"""
Graph Fourier transform in the eigenbasis of the normalized Laplacian.
"""
import numpy as np

from core.exceptions import SignalError


def _check(spec, x):
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (spec.dimension,):
        raise SignalError(
            f'signal shape {x.shape} does not match spectrum of dimension '
            f'{spec.dimension}'
        )
    return x


def gft(spec, x):
    """x_hat = F^T x"""
    return spec.vectors.T @ _check(spec, x)


def igft(spec, x_hat):
    """x = F x_hat"""
    return spec.vectors @ _check(spec, x_hat)
