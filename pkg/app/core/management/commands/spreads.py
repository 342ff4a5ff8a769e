"""
Django command that measures the graph and spectral spreads of a signal.
"""
import numpy as np

from core.distances import geodesic_distances
from core.exceptions import SignalError
from core.management.commands._base import CurveCommand
from report.emitters import emit_csv, emit_json
from spectral.operators import normalized_laplacian
from spectral.spreads import global_graph_spread, spread_point


def read_signal(path):
    """One value per line, aligned to vertex ids; '#' starts a comment"""
    try:
        return np.loadtxt(path, dtype=np.float64, comments='#', ndmin=1)
    except ValueError as exc:
        raise SignalError(f'cannot read signal {path}: {exc}') from exc


class Command(CurveCommand):
    help = 'Graph spread and spectral spread of a signal about a center.'
    curve_options = False
    formats = ('csv', 'json')

    def add_command_arguments(self, parser):
        parser.add_argument('--signal', required=True, help='signal file')
        parser.add_argument(
            '--global-spread', action='store_true',
            help='also minimise the graph spread over all centers',
        )

    def run(self, config, graph, options):
        x = read_signal(options['signal'])
        center = config['center']
        point = spread_point(
            x, geodesic_distances(graph, center), normalized_laplacian(graph),
        )
        doc = {'center': center, 's': point.s, 'g': point.g}
        if options['global_spread']:
            doc['global_g'], doc['global_center'] = global_graph_spread(
                x, graph,
            )
        if config['format'] == 'csv':
            columns = list(doc)
            return emit_csv(columns, [[doc[name] for name in columns]])
        return emit_json(doc, serializer_class=None)
