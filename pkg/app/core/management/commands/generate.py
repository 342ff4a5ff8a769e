"""
Django command that writes a generated graph as an edge list.
"""
from core.edgelist import write_edge_list
from core.generators import parse_generator
from core.management.commands._base import CurveCommand


class Command(CurveCommand):
    """Same spec and seed give byte-identical output"""
    help = "Generate a graph from a string such as 'er:100:0.1'."
    graph_input = False
    curve_options = False
    formats = ()

    def add_command_arguments(self, parser):
        parser.add_argument('spec', help="generator string, 'kind:param:...'")

    def run(self, config, graph, options):
        return write_edge_list(parse_generator(options['spec'],
                                               seed=config.get('seed')))
