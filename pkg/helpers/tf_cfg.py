""" Chernforge configuration options.
"""

import os
import sys
import configparser

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2017-2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'

THREADS_ENV = 'CHERNFORGE_THREADS'

class ConfigError(Exception):
    def __init__(self, msg):
        Exception.__init__(self, "Chernforge configuration error: %s" % msg)

class ChernforgeCfg(object):

    kvs = {}

    cfg_file = os.path.relpath(os.path.join(
        os.path.dirname(__file__),
        '..',
        'chernforge.ini'
    ))

    sections = ['General', 'Resolution', 'Tolerance']

    int_options = [
        ('General', 'verbose'),
        ('General', 'threads'),
        ('General', 'chunk'),
        ('Resolution', 'sphere'),
        ('Resolution', 'loop'),
        ('Resolution', 'torus'),
        ('Resolution', 'instanton'),
        ('Resolution', 'fiber'),
        ('Resolution', 'transport_steps'),
        ('Resolution', 'time_nodes'),
    ]

    def __init__(self, filename=None):
        if filename:
            self.cfg_file = filename
        self.defaults()
        self.cfg_err = None
        try:
            self.config.read(self.cfg_file)
        except Exception:
            self.cfg_err = sys.exc_info()
        self.__fill_kvs()

    def __fill_kvs(self):
        self.kvs = {}
        for section in self.sections:
            cfg = self.config[section]
            for key in cfg.keys():
                id = '_'.join([section.lower(), key])
                self.kvs[id] = cfg[key]

    def defaults(self):
        self.config = configparser.ConfigParser()
        self.config.read_dict({'General': {'verbose': '0',
                                           'threads': '0',
                                           'chunk': '16384',
                                           'version': '1.0'},
                               'Resolution': {'sphere': '200',
                                              'loop': '64',
                                              'torus': '24',
                                              'instanton': '30',
                                              'fiber': '64',
                                              'transport_steps': '4096',
                                              'time_nodes': '8'},
                               'Tolerance': {'integrality': '1e-6',
                                             'holonomy': '1e-6',
                                             'bounding': '1e-5',
                                             'instanton': '1e-3',
                                             'pointwise': '1e-10',
                                             'transgression': '1e-5',
                                             'calculus': '1e-8',
                                             'bianchi': '1e-7',
                                             'choice': '1e-6',
                                             'freed_lott': '1e-8',
                                             'suspension': '1e-6',
                                             'periods': '0.1',
                                             'flat': '1e-8',
                                             'thin': '1e-8'},
                              })

    def reload(self, filename):
        """Read another configuration file over the defaults."""
        self.cfg_file = filename
        self.defaults()
        self.cfg_err = None
        try:
            if not self.config.read(self.cfg_file):
                raise IOError("no such file")
        except Exception:
            self.cfg_err = sys.exc_info()
        self.__fill_kvs()

    def inc_verbose(self):
        verbose = int(self.config['General']['verbose']) + 1
        self.config['General']['verbose'] = str(verbose)

    def set_resolution(self, val, keys=None):
        """Override every resolution except the ODE step count."""
        try:
            if int(val) < 4:
                return False
        except ValueError:
            return False
        for key in keys or ['sphere', 'loop', 'torus', 'instanton', 'fiber']:
            self.config['Resolution'][key] = str(int(val))
        self.__fill_kvs()
        return True

    def set_option(self, section, opt, val):
        self.config[section][opt] = str(val)
        self.__fill_kvs()

    def get(self, section, opt):
        return self.config[section][opt]

    def get_int(self, section, opt):
        return int(self.config[section][opt])

    def resolution(self, name):
        return int(self.config['Resolution'][name])

    def tolerance(self, name):
        return float(self.config['Tolerance'][name])

    def threads(self):
        """Effective parallelism cap, the environment wins over the file."""
        threads = os.environ.get(THREADS_ENV)
        if threads is None:
            threads = self.config['General']['threads']
        try:
            threads = int(threads)
        except ValueError:
            raise ConfigError('%s must be an integer, got "%s"'
                              % (THREADS_ENV, threads))
        if threads <= 0:
            threads = os.cpu_count() or 1
        return threads

    def save_defaults(self):
        self.defaults()
        with open(self.cfg_file, 'w') as configfile:
            self.config.write(configfile)
        print('Default configuration saved to %s' % self.cfg_file)

    def check(self):
        if self.cfg_err is not None:
            msg = ('unable to read "%s" (%s: %s)' %
                   (self.cfg_file,
                    self.cfg_err[0].__name__,
                    self.cfg_err[1]))
            raise ConfigError(msg).with_traceback(self.cfg_err[2])

        for section, opt in self.int_options:
            try:
                val = int(self.config[section][opt])
            except ValueError:
                raise ConfigError('[%s] %s must be an integer' % (section, opt))
            if section == 'Resolution' and val < 4:
                raise ConfigError('[Resolution] %s must be at least 4' % opt)
        for opt in self.config['Tolerance'].keys():
            try:
                val = float(self.config['Tolerance'][opt])
            except ValueError:
                raise ConfigError('[Tolerance] %s must be a number' % opt)
            if val < 0:
                raise ConfigError('[Tolerance] %s must not be negative' % opt)
        self.threads()


def v_level():
    return int(cfg.get('General', 'verbose'))


def dbg(level, *args, **kwargs):
    if int(cfg.get('General', 'verbose')) >= level:
        print(file=sys.stderr, *args, **kwargs)


cfg = ChernforgeCfg()

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
