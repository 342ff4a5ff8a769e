"""
Django command that samples a closed-form uncertainty curve.
"""
from core.management.commands._base import CurveCommand
from curve.oracles import OracleCurve
from report.emitters import emit_csv, emit_json
from report.serializers import SCHEMA_VERSION


class Command(CurveCommand):
    help = "Sample gamma(s) of 'complete:N' or 'star' in closed form."
    graph_input = False
    curve_options = False
    formats = ('csv', 'json')
    default_format = 'csv'

    def add_command_arguments(self, parser):
        parser.add_argument('--family', required=True,
                            help="'complete:N' or 'star'")
        parser.add_argument('--points', type=int, default=101)

    def run(self, config, graph, options):
        if options['points'] < 2:
            raise ValueError('--points must be at least 2')
        oracle = OracleCurve.parse(options['family'])
        samples = oracle.sample(options['points'])
        if config['format'] == 'csv':
            return emit_csv(('s', 'gamma'), samples)
        return emit_json({
            'schema': SCHEMA_VERSION,
            'family': oracle.family,
            'n': oracle.n,
            'points': samples.tolist(),
        }, serializer_class=None)
