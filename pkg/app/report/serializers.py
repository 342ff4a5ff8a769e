"""
Serializers for run configuration and curve documents.
"""
from django.utils.translation import gettext as _

from rest_framework import serializers

SCHEMA_VERSION = 1
FORMATS = ('csv', 'json', 'svg')


class RunConfigSerializer(serializers.Serializer):
    """Validate command-line options shared by the subcommands"""
    edges = serializers.CharField(required=False, allow_null=True)
    generate = serializers.CharField(required=False, allow_null=True)
    center = serializers.IntegerField(min_value=0, default=0)
    epsilon = serializers.FloatField(required=False, allow_null=True)
    max_refinements = serializers.IntegerField(
        min_value=0, required=False, allow_null=True,
    )
    rounds = serializers.IntegerField(
        min_value=0, required=False, allow_null=True,
    )
    tol = serializers.FloatField(required=False, allow_null=True)
    output = serializers.CharField(required=False, allow_null=True)
    format = serializers.ChoiceField(choices=FORMATS, default='json')
    seed = serializers.IntegerField(required=False, allow_null=True)

    def validate_epsilon(self, value):
        if value is not None and value <= 0:
            raise serializers.ValidationError(_('epsilon must be positive'))
        return value

    def validate_tol(self, value):
        if value is not None and value <= 0:
            raise serializers.ValidationError(_('tol must be positive'))
        return value

    def validate(self, attrs):
        """Require exactly one input source for commands that read a graph"""
        sources = [
            name for name in ('edges', 'generate') if attrs.get(name)
        ]
        expected = 1 if self.context.get('graph_input', True) else 0
        if len(sources) != expected:
            if expected:
                msg = _('give exactly one of --edges or --generate')
            else:
                msg = _('this command does not read a graph')
            raise serializers.ValidationError(msg, code='input')
        return attrs


class KnotSerializer(serializers.Serializer):
    """Knot of a curve; alpha is null at the two ends of the domain"""
    alpha = serializers.FloatField(allow_null=True)
    s = serializers.FloatField()
    g = serializers.FloatField()


class PolylineField(serializers.ListField):
    """List of [s, g] pairs sorted by s"""
    child = serializers.ListField(
        child=serializers.FloatField(), min_length=2, max_length=2,
    )

    def to_internal_value(self, data):
        points = super().to_internal_value(data)
        if any(a[0] > b[0] for a, b in zip(points, points[1:])):
            raise serializers.ValidationError(
                _('polyline points must be sorted by s')
            )
        return points


class MetadataSerializer(serializers.Serializer):
    """Where the curve came from"""
    family = serializers.CharField()
    n_vertices = serializers.IntegerField(min_value=1)
    n_edges = serializers.FloatField(min_value=0)
    center = serializers.IntegerField(allow_null=True)
    lambda_max = serializers.FloatField()
    eccentricity = serializers.FloatField(min_value=0)
    width = serializers.FloatField(min_value=0)
    solves = serializers.IntegerField(min_value=0)


class CurveDocumentSerializer(serializers.Serializer):
    """Curve bounds as emitted by the curve and er_expected commands"""
    schema = serializers.IntegerField(default=SCHEMA_VERSION)
    center = serializers.IntegerField(allow_null=True)
    lambda_max = serializers.FloatField()
    metadata = MetadataSerializer()
    knots = KnotSerializer(many=True)
    lower = PolylineField(min_length=1)
    upper = PolylineField(min_length=1)
    gap = serializers.FloatField(min_value=0)

    def validate_schema(self, value):
        if value != SCHEMA_VERSION:
            raise serializers.ValidationError(
                _('unsupported schema version %(version)s')
                % {'version': value}
            )
        return value


class DiffusionPointSerializer(serializers.Serializer):
    t = serializers.FloatField(min_value=0)
    s = serializers.FloatField()
    g = serializers.FloatField()


class DiffusionDocumentSerializer(serializers.Serializer):
    """Diffusion trace, optionally with the curve it is compared to"""
    schema = serializers.IntegerField(default=SCHEMA_VERSION)
    center = serializers.IntegerField()
    points = DiffusionPointSerializer(many=True)
    curve = CurveDocumentSerializer(required=False, allow_null=True)
