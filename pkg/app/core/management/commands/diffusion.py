"""
Django command that traces heat diffusion from a vertex in the s-g plane.
"""
from core.management.commands._base import CurveCommand
from curve.problem import UncertaintyProblem
from diffusion.heat import DiffusionSampling, diffusion_curve
from report.documents import diffusion_document
from report.emitters import emit_csv, emit_json, emit_svg
from report.serializers import DiffusionDocumentSerializer


class Command(CurveCommand):
    """Diffusion trace eta_u0, with the curve bounds for comparison"""
    help = 'Trace x(t) = exp(-tL) delta_u0 through the s-g plane.'

    def add_command_arguments(self, parser):
        parser.add_argument('--points', type=int, help='time samples')
        parser.add_argument('--s-floor', type=float,
                            help='stop once s(t) drops below this')
        parser.add_argument(
            '--overlay', action='store_true',
            help='include the curve bounds in JSON output (always in SVG)',
        )

    def run(self, config, graph, options):
        center = config['center']
        problem = UncertaintyProblem.from_graph(
            graph, center, tol=config.get('tol'),
        )
        sampling = DiffusionSampling(
            points=options['points'], s_floor=options['s_floor'],
        )
        trace = diffusion_curve(problem.l, problem.p2, center, sampling)
        fmt = config['format']
        if fmt == 'csv':
            return emit_csv(
                ('t', 's', 'g'),
                list(zip(trace.times, trace.s, trace.g)),
            )

        curve = None
        if options['overlay'] or fmt == 'svg':
            curve = self.curve_output(config, graph)
        doc = diffusion_document(trace, curve)
        if fmt == 'svg':
            return emit_svg(curve, doc)
        return emit_json(doc, serializer_class=DiffusionDocumentSerializer)
