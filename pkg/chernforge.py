#!/usr/bin/env python3
from __future__ import print_function
import getopt
import json
import sys

from framework import bundles, characters, cycles, scenarios, specs
from geometry import diffchar, mesh
from helpers import error, tf_cfg

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def usage():
    print("""
Differential characteristic classes of bundles with connections.

chernforge.py [options] list-scenarios
chernforge.py [options] run <scenario> [--set key=value]... [--resolution N]
                                       [--out file] [--timing]
chernforge.py [options] verify-all [--resolution N] [--out file] [--timing]
chernforge.py [options] eval <character> <cycle> [--out file]

Characters and cycles are registry specs, e.g.
    eval chern:k=1,bundle=monopole:n=1 latitude:theta0=pi/2
    eval euler,bundle=ts2 cap-boundary:theta0=2*pi/3

Configuration is stored in 'chernforge.ini', use '-d' option to get defaults.

-h, --help                        - Print this help and exit.
-v, --verbose                     - Enable verbose output.
-d, --defaults                    - Save default configuration to config file
                                    and exit.
-c, --config <file>               - Read configuration from this file.
-s, --set <key=value>             - Override a scenario parameter; 'tolerance'
                                    overrides every tolerance of the scenario.
-r, --resolution <N>              - Grid resolution of every chart.
-o, --out <file>                  - Write the JSON report to this file.
-t, --timing                      - Include wall time in the JSON report.

Exit status: 0 when every check passes, 1 when a check fails, 2 on usage
errors.
""")


class Options(object):

    def __init__(self):
        self.overrides = {}
        self.resolution = None
        self.out = None
        self.timing = False
        self.args = []


def parse_args(argv):
    """Options may follow the subcommand, the rest are its arguments."""
    opts = Options()
    options, opts.args = getopt.gnu_getopt(argv, 'hvdc:s:r:o:t',
                                           ['help', 'verbose', 'defaults',
                                            'config=', 'set=', 'resolution=',
                                            'out=', 'timing'])
    for opt, arg in options:
        if opt in ('-h', '--help'):
            usage()
            sys.exit(EXIT_PASS)
        elif opt in ('-v', '--verbose'):
            tf_cfg.cfg.inc_verbose()
        elif opt in ('-c', '--config'):
            tf_cfg.cfg.reload(arg)
        elif opt in ('-d', '--defaults'):
            tf_cfg.cfg.save_defaults()
            sys.exit(EXIT_PASS)
        elif opt in ('-s', '--set'):
            key, value = specs.parse_assignment(arg)
            opts.overrides[key] = value
        elif opt in ('-r', '--resolution'):
            opts.resolution = arg
        elif opt in ('-o', '--out'):
            opts.out = arg
        elif opt in ('-t', '--timing'):
            opts.timing = True
    return opts


def write_out(text, path):
    if path is None:
        return
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
        f.write('\n')


def list_scenarios(opts):
    for name in scenarios.scenario_names():
        sc = scenarios.scenario_defs[name]
        params = ', '.join('%s=%s' % kv for kv in sorted(sc.defaults.items()))
        print('%-22s %s' % (name, sc.description))
        if params:
            print('%-22s defaults: %s' % ('', params))
    print('\nbundles:    %s' % ', '.join(bundles.bundle_names()))
    print('cycles:     %s' % ', '.join(cycles.cycle_names()))
    print('characters: %s' % ', '.join(characters.character_names()))
    return EXIT_PASS


def run(opts):
    if len(opts.args) != 1:
        raise error.ArgumentError('run takes exactly one scenario name')
    report = scenarios.run_scenario(opts.args[0], opts.overrides,
                                    opts.resolution)
    print(report.summary())
    write_out(report.to_json(opts.timing), opts.out)
    return EXIT_PASS if report.passed else EXIT_FAIL


def verify_all(opts):
    if opts.args or opts.overrides:
        raise error.ArgumentError('verify-all takes no scenario arguments')
    reports = scenarios.verify_all(opts.resolution)
    for report in reports:
        print(report.summary())
    passed = all(r.passed for r in reports)
    print('\n%d scenarios, %d failed' % (len(reports),
                                         len([r for r in reports
                                              if not r.passed])))
    doc = {'schema': scenarios.SCHEMA,
           'version': tf_cfg.cfg.get('General', 'version'),
           'reports': [r.as_dict(opts.timing) for r in reports],
           'passed': passed}
    write_out(json.dumps(doc, indent=2, sort_keys=True), opts.out)
    return EXIT_PASS if passed else EXIT_FAIL


def curvature_periods(character):
    """Periods of the curvature on the base, when it is a closed 2k-manifold."""
    base = character.base
    if base.dimension != character.degree or not base.is_closed():
        return []
    try:
        z = mesh.fundamental_cycle(base)
        return diffchar.delta2_periods(character, [z])
    except error.Error as e:
        tf_cfg.dbg(2, "\tNo curvature periods of %s: %s" % (character.name, e))
        return []


def evaluate(opts):
    if len(opts.args) != 2:
        raise error.ArgumentError('eval takes a character and a cycle')
    character_text, cycle_text = opts.args
    with scenarios.resolution_override(opts.resolution):
        character, z, value = characters.evaluate(character_text, cycle_text)
        periods = curvature_periods(character)
    doc = {'schema': scenarios.SCHEMA,
           'version': tf_cfg.cfg.get('General', 'version'),
           'character': character_text,
           'cycle': cycle_text,
           'value_mod_1': value,
           'curvature_periods': periods,
           'resolution': scenarios.resolution_snapshot(),
           'tolerances': {key: tf_cfg.cfg.tolerance(key)
                          for key in tf_cfg.cfg.config['Tolerance'].keys()}}
    print('%s(%s) = %.12f mod 1' % (character.name, z.name, value))
    write_out(json.dumps(doc, indent=2, sort_keys=True), opts.out)
    return EXIT_PASS


COMMANDS = {
    'list-scenarios': list_scenarios,
    'run': run,
    'verify-all': verify_all,
    'eval': evaluate,
}


def main(argv):
    try:
        opts = parse_args(argv)
    except getopt.GetoptError as e:
        print(e, file=sys.stderr)
        usage()
        return EXIT_USAGE
    except error.SpecError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE

    try:
        tf_cfg.cfg.check()
    except tf_cfg.ConfigError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE

    if not opts.args or opts.args[0] not in COMMANDS:
        usage()
        return EXIT_USAGE
    command = COMMANDS[opts.args[0]]
    opts.args = opts.args[1:]
    try:
        return command(opts)
    except (error.SpecError, error.ArgumentError) as e:
        print('%s: %s' % (type(e).__name__, e), file=sys.stderr)
        return EXIT_USAGE
    except error.Error as e:
        print('%s: %s' % (type(e).__name__, e), file=sys.stderr)
        return EXIT_FAIL


if __name__ == '__main__':
    sys.exit(main(sys.argv[1:]))

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
