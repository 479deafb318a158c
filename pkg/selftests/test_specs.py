import math
import unittest

from framework import specs
from helpers import error

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'


class ParseTest(unittest.TestCase):

    def test_nested_bundle(self):
        spec = specs.parse('chern:k=1,bundle=monopole:n=2')
        self.assertEqual(spec.name, 'chern')
        self.assertEqual(spec.integer('k'), 1)
        inner = spec.nested('bundle')
        self.assertEqual(inner.name, 'monopole')
        self.assertEqual(inner.integer('n'), 2)

    def test_comma_after_name(self):
        spec = specs.parse('euler,bundle=ts2')
        self.assertEqual(spec.name, 'euler')
        self.assertEqual(spec.nested('bundle').name, 'ts2')
        self.assertEqual(spec.nested('bundle').params, {})

    def test_expressions(self):
        spec = specs.parse('latitude:theta0=2*pi/3,w=-2')
        self.assertAlmostEqual(spec.number('theta0'), 2.0 * math.pi / 3.0,
                               places=14)
        self.assertEqual(spec.integer('w'), -2)
        self.assertIsInstance(spec.get('w'), int)

    def test_identifiers(self):
        spec = specs.parse('trivial:rank=2,base=sphere')
        self.assertEqual(spec.identifier('base'), 'sphere')
        with self.assertRaises(error.SpecError):
            spec.number('base')
        with self.assertRaises(error.SpecError):
            spec.identifier('rank')

    def test_bare_name(self):
        spec = specs.parse('ts2')
        self.assertEqual(spec.name, 'ts2')
        self.assertEqual(spec.params, {})
        self.assertIsNone(spec.get('n'))

    def test_integer_check(self):
        spec = specs.parse('monopole:n=5/2')
        with self.assertRaises(error.SpecError):
            spec.integer('n')


class ParseErrorTest(unittest.TestCase):

    def assertPosition(self, text, position):
        with self.assertRaises(error.SpecError) as ctx:
            specs.parse(text)
        self.assertEqual(ctx.exception.position, position)
        self.assertEqual(ctx.exception.text, text)

    def test_empty_value(self):
        self.assertPosition('chern:k=', 8)

    def test_bad_name(self):
        self.assertPosition('1chern', 0)

    def test_missing_colon(self):
        self.assertPosition('chern;k=1', 5)

    def test_trailing_comma(self):
        self.assertPosition('chern:k=1,', 9)

    def test_duplicate(self):
        self.assertPosition('cap:theta0=1,theta0=2', 13)

    def test_free_symbols(self):
        self.assertPosition('cap:theta0=y+1', 11)

    def test_nested_position(self):
        # positions inside a nested spec refer to the whole string
        self.assertPosition('chern:k=1,bundle=monopole:n=', 28)

    def test_unknown_key(self):
        spec = specs.parse('monopole:charge=1')
        with self.assertRaises(error.SpecError):
            spec.check_keys(('n',))


class AssignmentTest(unittest.TestCase):

    def test_assignment(self):
        self.assertEqual(specs.parse_assignment('n=3'), ('n', 3))
        key, value = specs.parse_assignment('theta0=pi/4')
        self.assertEqual(key, 'theta0')
        self.assertAlmostEqual(value, math.pi / 4.0, places=14)

    def test_bad_assignment(self):
        for text in ('=3', 'n', '1n=2', 'n='):
            with self.assertRaises(error.SpecError):
                specs.parse_assignment(text)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
