"""
Tests for the run configuration and document serializers.
"""
from django.test import SimpleTestCase

from report.serializers import (
    CurveDocumentSerializer,
    DiffusionDocumentSerializer,
    RunConfigSerializer,
)

METADATA = {
    'family': 'complete:4',
    'n_vertices': 4,
    'n_edges': 6.0,
    'center': 0,
    'lambda_max': 4 / 3,
    'eccentricity': 1.0,
    'width': 1.6666666666666667,
    'solves': 2,
}


def curve_payload(**changes):
    payload = {
        'schema': 1,
        'center': 0,
        'lambda_max': 4 / 3,
        'metadata': METADATA,
        'knots': [
            {'alpha': None, 's': 0.0, 'g': 0.75},
            {'alpha': None, 's': 4 / 3, 'g': 0.25},
        ],
        'lower': [[0.0, 0.0], [4 / 3, 0.0]],
        'upper': [[0.0, 0.75], [4 / 3, 0.25]],
        'gap': 0.5,
    }
    payload.update(changes)
    return payload


class RunConfigSerializerTests(SimpleTestCase):
    """Test RunConfigSerializer"""

    def test_defaults(self):
        """Test center and format defaults"""
        serializer = RunConfigSerializer(data={'generate': 'complete:4'})

        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data['center'], 0)
        self.assertEqual(serializer.validated_data['format'], 'json')

    def test_one_input_source(self):
        """Test both or neither input source is an error"""
        for data in ({}, {'generate': 'star:5', 'edges': 'graph.txt'}):
            serializer = RunConfigSerializer(data=data)

            self.assertFalse(serializer.is_valid())
            self.assertIn('non_field_errors', serializer.errors)

    def test_no_graph_commands(self):
        """Test commands without a graph refuse an input source"""
        context = {'graph_input': False}

        self.assertTrue(RunConfigSerializer(data={}, context=context)
                        .is_valid())
        self.assertFalse(RunConfigSerializer(
            data={'generate': 'star:5'}, context=context,
        ).is_valid())

    def test_positive_numbers(self):
        """Test epsilon, tol and center ranges"""
        serializer = RunConfigSerializer(data={
            'generate': 'star:5', 'epsilon': 0.0, 'tol': -1.0, 'center': -1,
        })

        self.assertFalse(serializer.is_valid())
        self.assertEqual(set(serializer.errors),
                         {'epsilon', 'tol', 'center'})

    def test_unknown_format(self):
        """Test formats outside csv, json and svg"""
        serializer = RunConfigSerializer(
            data={'generate': 'star:5', 'format': 'png'},
        )

        self.assertFalse(serializer.is_valid())
        self.assertIn('format', serializer.errors)


class CurveDocumentSerializerTests(SimpleTestCase):
    """Test CurveDocumentSerializer"""

    def test_valid(self):
        """Test a well-formed document"""
        serializer = CurveDocumentSerializer(data=curve_payload())

        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertIsNone(serializer.validated_data['knots'][0]['alpha'])

    def test_schema_version(self):
        """Test other schema versions are rejected"""
        serializer = CurveDocumentSerializer(data=curve_payload(schema=2))

        self.assertFalse(serializer.is_valid())
        self.assertIn('schema', serializer.errors)

    def test_unsorted_polyline(self):
        """Test polylines must be sorted by s"""
        serializer = CurveDocumentSerializer(
            data=curve_payload(upper=[[1.0, 0.0], [0.0, 1.0]]),
        )

        self.assertFalse(serializer.is_valid())
        self.assertIn('upper', serializer.errors)

    def test_point_pairs(self):
        """Test polyline points have two coordinates"""
        serializer = CurveDocumentSerializer(
            data=curve_payload(lower=[[0.0, 0.0, 1.0]]),
        )

        self.assertFalse(serializer.is_valid())
        self.assertIn('lower', serializer.errors)

    def test_negative_gap(self):
        """Test the gap is nonnegative"""
        serializer = CurveDocumentSerializer(data=curve_payload(gap=-1.0))

        self.assertFalse(serializer.is_valid())


class DiffusionDocumentSerializerTests(SimpleTestCase):
    """Test DiffusionDocumentSerializer"""

    def test_with_and_without_curve(self):
        """Test the curve is optional"""
        points = [{'t': 0.0, 's': 1.0, 'g': 0.0}]
        for curve in (None, curve_payload()):
            serializer = DiffusionDocumentSerializer(data={
                'schema': 1, 'center': 0, 'points': points, 'curve': curve,
            })

            self.assertTrue(serializer.is_valid(), serializer.errors)

    def test_negative_time(self):
        """Test times are nonnegative"""
        serializer = DiffusionDocumentSerializer(data={
            'schema': 1, 'center': 0,
            'points': [{'t': -1.0, 's': 1.0, 'g': 0.0}],
        })

        self.assertFalse(serializer.is_valid())
