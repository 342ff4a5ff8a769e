"""
Django command for the expected uncertainty curve of G(N, p).
"""
from core.conf import curve_settings
from core.management.commands._base import CurveCommand
from curve.sandwich import sandwich
from ensemble.radial import (
    ReducedProblem,
    distance_distribution,
    reduced_model,
)
from report.documents import er_document


class Command(CurveCommand):
    """Radial approximation of the ER curve on s in [0, 1]"""
    help = 'Expected uncertainty curve of Erdos-Renyi graphs G(N, p).'
    graph_input = False

    def add_command_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--p', type=float, required=True)

    def run(self, config, graph, options):
        dd = distance_distribution(options['n'], options['p'])
        model = reduced_model(dd)
        problem = ReducedProblem(model, tol=config.get('tol'))
        bounds = sandwich(
            problem,
            epsilon=config.get('epsilon'),
            max_refinements=config.get('max_refinements'),
            rounds=config.get('rounds'),
            workers=curve_settings.WORKERS,
        )
        self.log(f'{model.dimension} shells, gap {bounds.gap:.3e}')
        return self.render_curve(
            er_document(model, problem, bounds), config['format'],
        )
