"""
Numerical settings for the project, read from ``settings.GRAPH_UNCERTAINTY``.

Access goes through ``curve_settings``, for example
``curve_settings.DENSE_THRESHOLD``. Missing keys fall back to DEFAULTS.
"""
from django.conf import settings
from django.core.signals import setting_changed
from rest_framework.settings import APISettings


DEFAULTS = {
    # dense symmetric eigensolver up to this dimension, Lanczos above it
    'DENSE_THRESHOLD': 512,
    'SOLVER_TOL': 1e-10,
    'MAX_ITER_FACTOR': 10,
    # eigenvalues within GAP_TOL * max(1, |q|) belong to the same eigenspace
    'GAP_TOL': 1e-8,
    # default sandwich epsilon is EPSILON_SCALE * W
    'EPSILON_SCALE': 1e-6,
    'GEOMETRIC_RETRIES': 100,
    'ER_TAIL_TOL': 1e-7,
    'ER_MAX_DISTANCE': 64,
    'DIFFUSION_POINTS': 200,
    'DIFFUSION_S_FLOOR': 1e-4,
    'DIFFUSION_T_MIN_SCALE': 1e-3,
    'WORKERS': 1,
    'CSV_DIGITS': 17,
    'SVG_WIDTH': 640,
    'SVG_HEIGHT': 480,
}


class CurveSettings(APISettings):
    """Settings object backed by the GRAPH_UNCERTAINTY dict"""

    @property
    def user_settings(self):
        if not hasattr(self, '_user_settings'):
            self._user_settings = getattr(settings, 'GRAPH_UNCERTAINTY', {})
        return self._user_settings


curve_settings = CurveSettings(None, DEFAULTS, ())


def reload_curve_settings(*args, **kwargs):
    """Drop cached values when tests override GRAPH_UNCERTAINTY"""
    if kwargs['setting'] == 'GRAPH_UNCERTAINTY':
        curve_settings.reload()


setting_changed.connect(reload_curve_settings)
