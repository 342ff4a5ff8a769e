"""
Shared plumbing for the curve commands: option parsing, input loading,
error translation and output writing.
"""
from pathlib import Path
import sys

from django.core.management.base import BaseCommand, CommandError

from core.conf import curve_settings
from core.edgelist import from_edge_list
from core.exceptions import NumericalError
from core.generators import parse_generator
from curve.problem import UncertaintyProblem
from curve.sandwich import sandwich
from report.documents import curve_document
from report.emitters import curve_rows, emit_csv, emit_json, emit_svg
from report.serializers import FORMATS, RunConfigSerializer

USAGE_ERROR = 1
NUMERICAL_ERROR = 2


class CurveCommand(BaseCommand):
    """Base command; subclasses implement ``run``"""
    requires_system_checks = []
    # read a graph from --edges or --generate
    graph_input = True
    # accept --epsilon, --max-refinements, --rounds and --tol
    curve_options = True
    formats = FORMATS
    default_format = 'json'

    def create_parser(self, prog_name, subcommand, **kwargs):
        """Parser whose errors exit with the usage error code"""
        parser = super().create_parser(prog_name, subcommand, **kwargs)

        def error(message):
            if parser.called_from_command_line:
                parser.print_usage(sys.stderr)
                parser.exit(USAGE_ERROR, f'{parser.prog}: error: {message}\n')
            raise CommandError(f'Error: {message}', returncode=USAGE_ERROR)

        parser.error = error
        return parser

    def add_arguments(self, parser):
        if self.graph_input:
            parser.add_argument('--edges', help='edge-list file')
            parser.add_argument(
                '--generate', help="generator string such as 'er:1000:0.03'",
            )
            parser.add_argument('--center', type=int, default=0)
        if self.curve_options:
            parser.add_argument('--epsilon', type=float)
            parser.add_argument('--max-refinements', type=int)
            parser.add_argument('--rounds', type=int)
            parser.add_argument('--tol', type=float)
        parser.add_argument('--seed', type=int)
        parser.add_argument('--output', help='write here instead of stdout')
        if self.formats:
            parser.add_argument(
                '--format', choices=self.formats, default=self.default_format,
            )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        """Hook for options of one command"""

    def validate(self, options):
        fields = RunConfigSerializer().fields
        data = {
            name: options[name] for name in fields
            if options.get(name) is not None
        }
        serializer = RunConfigSerializer(
            data=data, context={'graph_input': self.graph_input},
        )
        if not serializer.is_valid():
            messages = [
                f'{field}: {" ".join(str(e) for e in errors)}'
                for field, errors in serializer.errors.items()
            ]
            raise CommandError('; '.join(messages), returncode=USAGE_ERROR)
        return serializer.validated_data

    def load_graph(self, config):
        if config.get('edges'):
            with open(config['edges'], 'rb') as stream:
                graph = from_edge_list(stream)
        else:
            graph = parse_generator(
                config['generate'], seed=config.get('seed'),
            )
        graph.check_vertex(config['center'])
        return graph

    def curve_bounds(self, config, graph):
        problem = UncertaintyProblem.from_graph(
            graph, config['center'], tol=config.get('tol'),
        )
        bounds = sandwich(
            problem,
            epsilon=config.get('epsilon'),
            max_refinements=config.get('max_refinements'),
            rounds=config.get('rounds'),
            workers=curve_settings.WORKERS,
        )
        return problem, bounds

    def render_curve(self, doc, fmt):
        if fmt == 'csv':
            return emit_csv(('alpha', 's', 'g'), curve_rows(doc))
        if fmt == 'svg':
            return emit_svg(doc)
        return emit_json(doc)

    def curve_output(self, config, graph):
        problem, bounds = self.curve_bounds(config, graph)
        self.log(f'gap {bounds.gap:.3e} after {bounds.solves} solves')
        return curve_document(problem, bounds)

    def run(self, config, graph, options):
        raise NotImplementedError('subclasses of CurveCommand provide run()')

    def log(self, message):
        if self.verbosity > 1:
            self.stderr.write(message)

    def handle(self, *args, **options):
        self.verbosity = options['verbosity']
        config = self.validate(options)
        try:
            graph = self.load_graph(config) if self.graph_input else None
            content = self.run(config, graph, options)
        except NumericalError as exc:
            raise CommandError(str(exc), returncode=NUMERICAL_ERROR) from exc
        except (ValueError, OSError) as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR) from exc
        self.write(content, config.get('output'))

    def write(self, content, output):
        if isinstance(content, str):
            content = content.encode('utf-8')
        if output:
            Path(output).write_bytes(content)
            self.log(self.style.SUCCESS(f'Wrote {output}'))
        else:
            self.stdout.write(content.decode('utf-8'), ending='')
