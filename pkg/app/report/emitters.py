"""
JSON, CSV and SVG emitters for curve documents.
"""
import io
import logging

import numpy as np
from django.template.loader import render_to_string
from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from core.conf import curve_settings
from core.exceptions import DocumentError
from report.serializers import CurveDocumentSerializer

logger = logging.getLogger(__name__)

MARGIN_LEFT = 70
MARGIN_RIGHT = 20
MARGIN_TOP = 30
MARGIN_BOTTOM = 50

# name, stroke colour, dash pattern
STYLES = {
    'lower': ('#1f77b4', ''),
    'upper': ('#d62728', '6 3'),
    'diffusion': ('#2ca02c', '2 2'),
}


def _validated(doc, serializer_class):
    serializer = serializer_class(data=doc)
    if not serializer.is_valid():
        raise DocumentError(f'invalid document: {serializer.errors}')
    return serializer.validated_data


def emit_json(doc, serializer_class=CurveDocumentSerializer):
    """Validate ``doc`` and render it as indented JSON bytes"""
    if serializer_class is not None:
        _validated(doc, serializer_class)
    try:
        return JSONRenderer().render(doc, renderer_context={'indent': 2})
    except ValueError as exc:
        raise DocumentError(f'document is not valid JSON: {exc}') from exc


def parse_json(data, serializer_class=CurveDocumentSerializer):
    """Parse JSON bytes back into a validated document"""
    try:
        doc = JSONParser().parse(io.BytesIO(data))
    except ParseError as exc:
        raise DocumentError(str(exc.detail)) from exc
    return _validated(doc, serializer_class)


def emit_csv(columns, rows):
    """CSV text with a header row; numbers keep CSV_DIGITS significant
    digits so repeated runs diff cleanly."""
    rows = np.asarray(rows, dtype=np.float64).reshape(-1, len(columns))
    buffer = io.StringIO()
    np.savetxt(
        buffer, rows,
        fmt=f'%.{curve_settings.CSV_DIGITS}g',
        delimiter=',',
        header=','.join(columns),
        comments='',
    )
    return buffer.getvalue()


def curve_rows(doc):
    """alpha,s,g rows of the knots of a curve document.

    The end knots carry alpha = -inf (left) and +inf (right).
    """
    rows = []
    for i, knot in enumerate(doc['knots']):
        alpha = knot['alpha']
        if alpha is None:
            alpha = -np.inf if i == 0 else np.inf
        rows.append([alpha, knot['s'], knot['g']])
    return rows


def _plot_points(pairs, s_max, g_max, width, height):
    inner_w = width - MARGIN_LEFT - MARGIN_RIGHT
    inner_h = height - MARGIN_TOP - MARGIN_BOTTOM
    pairs = np.asarray(pairs, dtype=np.float64).reshape(-1, 2)
    x = MARGIN_LEFT + pairs[:, 0] / s_max * inner_w
    y = MARGIN_TOP + inner_h - pairs[:, 1] / g_max * inner_h
    return ' '.join(f'{a:.2f},{b:.2f}' for a, b in zip(x, y))


def emit_svg(doc, diffusion=None):
    """SVG 1.1 plot of the bounds of ``doc``.

    The plot covers [0, lambda_N] x [0, E^2]. A diffusion document adds
    its trace as a third polyline.
    """
    lines = {'lower': doc.get('lower') or [], 'upper': doc.get('upper') or []}
    if diffusion is not None:
        lines['diffusion'] = [[p['s'], p['g']] for p in diffusion['points']]
    if not all(lines.values()):
        raise DocumentError('cannot plot an empty polyline')

    meta = doc['metadata']
    every = np.concatenate([np.asarray(pairs) for pairs in lines.values()])
    s_max = max(meta['lambda_max'], float(every[:, 0].max()))
    g_max = max(meta['eccentricity'] ** 2, float(every[:, 1].max()))
    if s_max <= 0 or g_max <= 0:
        raise DocumentError('degenerate plot range')

    width, height = curve_settings.SVG_WIDTH, curve_settings.SVG_HEIGHT
    polylines = [
        {
            'name': name,
            'stroke': STYLES[name][0],
            'dash': STYLES[name][1],
            'points': _plot_points(pairs, s_max, g_max, width, height),
            'legend_y': MARGIN_TOP + 16 * (row + 1),
        }
        for row, (name, pairs) in enumerate(lines.items())
    ]
    context = {
        'width': width,
        'height': height,
        'left': MARGIN_LEFT,
        'right': width - MARGIN_RIGHT,
        'top': MARGIN_TOP,
        'bottom': height - MARGIN_BOTTOM,
        'middle_x': (MARGIN_LEFT + width - MARGIN_RIGHT) / 2,
        'middle_y': (MARGIN_TOP + height - MARGIN_BOTTOM) / 2,
        'title': f"{meta['family']}, center {meta['center']}",
        's_max': f'{s_max:.4g}',
        'g_max': f'{g_max:.4g}',
        'polylines': polylines,
    }
    logger.debug('plotting %d polylines', len(polylines))
    return render_to_string('report/curve.svg', context).encode('utf-8')
