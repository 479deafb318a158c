import unittest
import os
import errno
import json

from helpers import tf_cfg

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2017-2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'

class DisabledListLoader(object):
    """ List of tests excluded from regular runs, with reasons """

    def __init__(self, disabled_list_file):
        self.disabled_list_file = disabled_list_file
        self.disabled = []
        self.disable = False

    def try_load(self):
        """ Try to load specified disabled list """
        tf_cfg.dbg(2, "Loading disabled file")
        self.disabled = []
        try:
            with open(self.disabled_list_file, 'r') as dis_file:
                f = json.load(dis_file)
        except IOError as err:
            if err.errno != errno.ENOENT:
                raise Exception("Error loading disabled tests")
            tf_cfg.dbg(2, "File %s not found" % self.disabled_list_file)
            return False
        self.disable = f.get('disable', False)
        if self.disable:
            self.disabled = f.get('disabled', [])
        return True

    def names(self):
        return [entry['name'] for entry in self.disabled]


def testsuite_flatten(dest, src):
    if isinstance(src, unittest.TestSuite):
        for t in src:
            testsuite_flatten(dest, t)
    else:
        dest.append(src)

def testcase_in(test, lst):
    test_id = test.id()
    for entry in lst:
        if test_id == entry or test_id.startswith(entry + '.'):
            return True
    return False

def test_id_parse(name):
    """ Convert 'algebra/test_newton.py' to 'algebra.test_newton' """
    if name and os.path.exists(name):
        name = os.path.relpath(name)
        if name.endswith('.py'):
            name = name[:-3]
        return name.replace(os.sep, '.')
    return name

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
