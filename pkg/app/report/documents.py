"""
Plain-dict documents built from computed curves, ready for the emitters.
"""
import math

from report.serializers import SCHEMA_VERSION


def _finite_or_none(value):
    return float(value) if math.isfinite(value) else None


def _pairs(array):
    return [[float(s), float(g)] for s, g in array]


def curve_document(problem, bounds, **metadata):
    """Curve document of a problem and its sandwich bounds.

    Graph metadata is read from ``problem.graph`` when present; keyword
    arguments fill in or override it (the ER model has no graph).
    """
    g = problem.graph
    meta = {
        'family': g.family if g is not None else 'custom',
        'n_vertices': g.n_vertices if g is not None else problem.dimension,
        'n_edges': float(g.n_edges) if g is not None else 0.0,
        'center': problem.center,
        'lambda_max': float(problem.lambda_max),
        'eccentricity': math.sqrt(problem.eccentricity_squared),
        'width': float(problem.width),
        'solves': int(bounds.solves),
    }
    meta.update(metadata)
    return {
        'schema': SCHEMA_VERSION,
        'center': meta['center'],
        'lambda_max': meta['lambda_max'],
        'metadata': meta,
        'knots': [
            {
                'alpha': _finite_or_none(knot.alpha),
                's': float(knot.s),
                'g': float(knot.g),
            }
            for knot in bounds.knots
        ],
        'lower': _pairs(bounds.lower),
        'upper': _pairs(bounds.upper),
        'gap': float(bounds.gap),
    }


def er_document(model, problem, bounds):
    """Curve document of the expected ER curve"""
    return curve_document(
        problem, bounds,
        family=f'er:{model.n}:{model.p:g}',
        n_vertices=model.n,
        n_edges=model.p * model.n * (model.n - 1) / 2,
        center=None,
    )


def diffusion_document(trace, curve=None):
    return {
        'schema': SCHEMA_VERSION,
        'center': int(trace.center),
        'points': [
            {'t': float(t), 's': float(s), 'g': float(g)}
            for t, s, g in zip(trace.times, trace.s, trace.g)
        ],
        'curve': curve,
    }


def point_document(estimate):
    return {
        'schema': SCHEMA_VERSION,
        's': float(estimate.s),
        'lower': float(estimate.lower),
        'upper': float(estimate.upper),
        'achieved_s': float(estimate.achieved_s),
        'achieved_g': float(estimate.achieved_g),
        'vector': [float(value) for value in estimate.vector],
    }
