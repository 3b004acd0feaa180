"""
Tests for dyer/lib/methods.py module
"""
import io
import json
import unittest

import dyer.lib.configurator as cfg
import dyer.lib.methods as methods
from dyer.lib.parabolic import ParabolicCalculus, ParabolicError
from dyer.lib.presentation import Presentation, UnknownVertexError
from dyer.lib.reducer import Reducer
from dyer.lib.rewriting import CriticalPair, PairKind


class VerticesTest(unittest.TestCase):
    """
    Tests for parse_vertices and format_vertices functions
    """

    def setUp(self):
        self.presentation = Presentation([('x', 2), ('y', 2), ('z', 2)], [('x', 'y', 3), ('y', 'z', 3)])

    def test_correct_input(self):
        self.assertEqual(methods.parse_vertices(self.presentation, 'x,z'), frozenset({'x', 'z'}))
        self.assertEqual(methods.parse_vertices(self.presentation, ' z , x ,'), frozenset({'x', 'z'}))

        # The empty set
        self.assertEqual(methods.parse_vertices(self.presentation, ''), frozenset())

        # Vertices are written in the order of declaration
        self.assertEqual(methods.format_vertices(self.presentation, {'z', 'x', 'y'}), 'x,y,z')
        self.assertEqual(methods.format_vertices(self.presentation, set()), '')

    def test_incorrect_input(self):
        with self.assertRaises(UnknownVertexError):
            methods.parse_vertices(self.presentation, 'x,w')
        with self.assertRaises(UnknownVertexError):
            methods.format_vertices(self.presentation, {'w'})


class ParabolicTextTest(unittest.TestCase):
    """
    Tests for parse_parabolic and format_parabolic functions
    """

    def setUp(self):
        self.reducer = Reducer(Presentation([('x', 2), ('y', 2)], [('x', 'y', 3)]))
        self.calculus = ParabolicCalculus(self.reducer)

    def test_correct_input(self):
        subgroup = methods.parse_parabolic(self.calculus, self.reducer, 'y;x')
        self.assertEqual(subgroup.conjugator, self.reducer.parse('y'))
        self.assertEqual(subgroup.generators, frozenset({'x'}))
        self.assertEqual(methods.format_parabolic(subgroup), 'y;x')

        # The conjugator is replaced by the minimal element of its coset
        subgroup = methods.parse_parabolic(self.calculus, self.reducer, 'y x;x')
        self.assertEqual(methods.format_parabolic(subgroup), 'y;x')

        self.assertEqual(methods.format_parabolic(methods.parse_parabolic(self.calculus, self.reducer, ';x,y')),
                         ';x,y')
        # The trivial subgroup
        self.assertEqual(methods.format_parabolic(methods.parse_parabolic(self.calculus, self.reducer, 'x y;')),
                         ';')

    def test_incorrect_input(self):
        with self.assertRaises(ParabolicError):
            methods.parse_parabolic(self.calculus, self.reducer, 'x y')
        with self.assertRaises(ParabolicError):
            methods.parse_parabolic(self.calculus, self.reducer, 'x;y;x')
        with self.assertRaises(UnknownVertexError):
            methods.parse_parabolic(self.calculus, self.reducer, 'x;w')


class FormatTest(unittest.TestCase):
    def test_format_element(self):
        reducer = Reducer(Presentation([('x', 2), ('y', 2)], [('x', 'y', 3)]))
        self.assertEqual(methods.format_element(reducer.parse('y x y')), 'x y x')
        self.assertEqual(methods.format_element(reducer.identity()), '')

    def test_format_pair(self):
        pair = CriticalPair(('x',), ('x',), ('y^2', 'x'), (), ('y^2', 'x', 'y^2'), PairKind.OVERLAP, 0, 1)
        self.assertEqual(methods.format_pair(pair), 'overlap ((x), (x), (y^2 x), (), (y^2 x y^2))')


class PrintResultsTest(unittest.TestCase):
    """
    Tests for print_results function
    """

    def test_plain(self):
        file = io.StringIO()
        methods.print_results('len', ['x y'], 2, ['2'], file, cfg.FORMAT_PLAIN)
        self.assertEqual(file.getvalue(), '2\n')

        file = io.StringIO()
        methods.print_results('validate', [], {}, ['Invalid', 'first', 'second'], file, cfg.FORMAT_PLAIN)
        self.assertEqual(file.getvalue(), 'Invalid\nfirst\nsecond\n')

    def test_json_lines(self):
        file = io.StringIO()
        methods.print_results('eq', ['x', 'y'], False, ['false'], file, cfg.FORMAT_JSON_LINES)
        lines = file.getvalue().splitlines()

        self.assertEqual(len(lines), 1)
        self.assertEqual(json.loads(lines[0]), {'command': 'eq', 'inputs': ['x', 'y'], 'result': False})

    def test_incorrect_input(self):
        with self.assertRaises(TypeError):
            methods.print_results('len', [], 0, ['0'], None, cfg.FORMAT_PLAIN)
        with self.assertRaises(TypeError):
            methods.print_results('len', [], 0, ['0'], [], cfg.FORMAT_PLAIN)
