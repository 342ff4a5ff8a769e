"""
Closed-form uncertainty curves of complete graphs and star graphs
(the latter with the hub as center). Both accept scalars or arrays.
"""
from dataclasses import dataclass

import numpy as np

from core.exceptions import DomainError, InvalidParameterError

# slack on the domain ends and on radicands lost to rounding
SLACK = 1e-12


def _domain(s, high):
    s = np.asarray(s, dtype=np.float64)
    if np.any(s < -SLACK) or np.any(s > high + SLACK):
        raise DomainError(f's must lie in [0, {high:.12g}]')
    return np.clip(s, 0.0, high)


def _scalar(value):
    return float(value) if np.ndim(value) == 0 else value


def complete_gamma(n, s):
    """Lower half of the complete-graph ellipse, 0 <= s <= N/(N-1)"""
    if n < 3:
        raise InvalidParameterError('closed form needs N >= 3')
    s = _domain(s, n / (n - 1))
    radicand = 1 - (n - 2) * (s - 1) - (n - 1) * (s - 1) ** 2
    root = np.sqrt(np.clip(radicand, 0.0, None))
    value = (n - s * (n - 2) - 2 * root) / (4 + (n - 2) ** 2 / (n - 1))
    return _scalar(value)


def complete_ellipse_residual(n, s, g):
    """(2g - 1)^2 + (N-1)(s + (N-2)/(N-1) g - 1)^2 - 1"""
    s, g = np.asarray(s), np.asarray(g)
    value = (2 * g - 1) ** 2 + (n - 1) * (
        s + (n - 2) / (n - 1) * g - 1) ** 2 - 1
    return _scalar(value)


def star_gamma(s):
    """(1 - sqrt(s (2 - s))) / 2 for 0 <= s <= 2, independent of N"""
    s = _domain(s, 2.0)
    return _scalar(0.5 * (1 - np.sqrt(np.clip(s * (2 - s), 0.0, None))))


def star_ellipse_residual(s, g):
    """(s - 1)^2 + (2g - 1)^2 - 1"""
    s, g = np.asarray(s), np.asarray(g)
    return _scalar((s - 1) ** 2 + (2 * g - 1) ** 2 - 1)


def large_n_limit(s):
    """1 - s, the limit of the complete-graph curve on [0, 1]"""
    s = _domain(s, 1.0)
    return _scalar(1 - s)


@dataclass(frozen=True)
class OracleCurve:
    """A closed-form curve: 'complete' (needs n) or 'star'"""
    family: str
    n: int = None

    def __post_init__(self):
        if self.family not in ('complete', 'star'):
            raise InvalidParameterError(
                f'no closed form for {self.family!r}'
            )
        if self.family == 'complete' and (self.n is None or self.n < 3):
            raise InvalidParameterError('complete oracle needs N >= 3')

    @classmethod
    def parse(cls, text):
        """'complete:10' or 'star' (a size after 'star:' is ignored)"""
        family, *params = text.strip().split(':')
        if family == 'complete':
            if len(params) != 1:
                raise InvalidParameterError('use complete:N')
            try:
                return cls('complete', int(params[0]))
            except ValueError as exc:
                raise InvalidParameterError(str(exc)) from exc
        return cls(family)

    @property
    def domain(self):
        if self.family == 'complete':
            return 0.0, self.n / (self.n - 1)
        return 0.0, 2.0

    def __call__(self, s):
        if self.family == 'complete':
            return complete_gamma(self.n, s)
        return star_gamma(s)

    def residual(self, s, g):
        """Zero for points on the ellipse the curve belongs to"""
        if self.family == 'complete':
            return complete_ellipse_residual(self.n, s, g)
        return star_ellipse_residual(s, g)

    def sample(self, points=101):
        s = np.linspace(*self.domain, points)
        return np.column_stack([s, self(s)])
