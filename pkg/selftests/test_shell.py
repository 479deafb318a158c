import json
import os
import tempfile
import unittest

from helpers import shell

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'


class FakeTest(object):

    def __init__(self, test_id):
        self.test_id = test_id

    def id(self):
        return self.test_id


class ShellTest(unittest.TestCase):

    def test_disabled_list(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'tests_disabled.json')
            with open(path, 'w') as f:
                json.dump({'disable': True,
                           'disabled': [{'name': 'acceptance.test_scenarios',
                                         'reason': 'slow'}]}, f)
            loader = shell.DisabledListLoader(path)
            self.assertTrue(loader.try_load())
            self.assertEqual(loader.names(), ['acceptance.test_scenarios'])

            missing = shell.DisabledListLoader(os.path.join(tmp, 'none.json'))
            self.assertFalse(missing.try_load())
            self.assertEqual(missing.names(), [])

    def test_disabled_switch_off(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'tests_disabled.json')
            with open(path, 'w') as f:
                json.dump({'disable': False,
                           'disabled': [{'name': 'x', 'reason': 'y'}]}, f)
            loader = shell.DisabledListLoader(path)
            loader.try_load()
            self.assertFalse(loader.disable)
            self.assertEqual(loader.disabled, [])

    def test_testcase_in(self):
        t = FakeTest('calculus.test_forms.WedgeTest.test_antisymmetry')
        self.assertTrue(shell.testcase_in(t, ['calculus']))
        self.assertTrue(shell.testcase_in(t, ['calculus.test_forms.WedgeTest']))
        self.assertFalse(shell.testcase_in(t, ['calculus.test_']))
        self.assertFalse(shell.testcase_in(t, ['algebra']))

    def test_id_parse(self):
        self.assertEqual(shell.test_id_parse('algebra.test_newton'),
                         'algebra.test_newton')
        self.assertEqual(shell.test_id_parse(''), '')

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
