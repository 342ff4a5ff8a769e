"""
Django command that bounds the uncertainty curve of one vertex.
"""
from core.management.commands._base import CurveCommand


class Command(CurveCommand):
    """Sandwich bounds of gamma_u0 as JSON, CSV or SVG"""
    help = 'Bound the uncertainty curve of a vertex to a Hausdorff gap.'

    def run(self, config, graph, options):
        doc = self.curve_output(config, graph)
        return self.render_curve(doc, config['format'])
