"""
Django command that evaluates the uncertainty curve at one spectral spread.
"""
from core.management.commands._base import CurveCommand
from curve.problem import UncertaintyProblem
from curve.sandwich import point_query
from report.documents import point_document
from report.emitters import emit_csv, emit_json


class Command(CurveCommand):
    help = 'Bracket gamma_u0(s) and return a vector that achieves it.'
    curve_options = True
    formats = ('csv', 'json')

    def add_command_arguments(self, parser):
        parser.add_argument('--s', type=float, required=True, dest='s')

    def run(self, config, graph, options):
        problem = UncertaintyProblem.from_graph(
            graph, config['center'], tol=config.get('tol'),
        )
        estimate = point_query(
            problem, options['s'],
            epsilon=config.get('epsilon'),
            max_refinements=config.get('max_refinements') or 500,
        )
        doc = point_document(estimate)
        if config['format'] == 'csv':
            columns = ('s', 'lower', 'upper', 'achieved_s', 'achieved_g')
            return emit_csv(columns, [[doc[name] for name in columns]])
        return emit_json(doc, serializer_class=None)
