#!/usr/bin/env python3

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2018-2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'

import sys
import importlib.util

modules = ['unittest',
           'configparser',
           'concurrent.futures',
           'fractions',
           'getopt',
           'json',
           ]

modules_pip = [
            'numpy',
            'scipy',
            'sympy',
            ]


def make_report_line(name):
    filler_len = max(3, 20 - len(name))
    return '{} {}'.format(name, '.' * filler_len)


def present(module):
    try:
        return importlib.util.find_spec(module) is not None
    except ImportError:
        return False


print("\tChecking for required python3 modules:")

all_present = True

absent = []

package_list = []

for module in modules + modules_pip:
    if present(module):
        print("\t\t{} found".format(make_report_line(module)))
        continue
    print("\t\t{} not found".format(make_report_line(module)))
    absent.append(module)
    if module in modules_pip:
        package_list.append(module)
    all_present = False

if not all_present:
    print("\n\tMissing modules:")
    for module in absent:
        print("\t\t%s" % module)
    if len(package_list) > 0:
        print('\n\t\tRun "pip3 install -r ../requirements.txt"\n')
    sys.exit(1)

print("\n\tFound all required python modules.\n")
sys.exit(0)
