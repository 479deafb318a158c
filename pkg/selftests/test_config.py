import contextlib
import io
import os
import tempfile
import unittest
from unittest import mock

from helpers import tf_cfg

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'


class ConfigTest(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = os.path.join(self.tmp.name, 'chernforge.ini')
        self.cfg = tf_cfg.ChernforgeCfg(self.path)

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, text):
        with open(self.path, 'w') as f:
            f.write(text)

    def test_defaults(self):
        self.cfg.check()
        self.assertEqual(self.cfg.resolution('sphere'), 200)
        self.assertEqual(self.cfg.resolution('transport_steps'), 4096)
        self.assertEqual(self.cfg.tolerance('integrality'), 1e-6)
        self.assertEqual(self.cfg.tolerance('instanton'), 1e-3)
        self.assertEqual(self.cfg.get_int('General', 'chunk'), 16384)

    def test_file_overrides_defaults(self):
        self.write('[Resolution]\nsphere = 64\n\n[Tolerance]\nflat = 1e-9\n')
        self.cfg.reload(self.path)
        self.cfg.check()
        self.assertEqual(self.cfg.resolution('sphere'), 64)
        self.assertEqual(self.cfg.resolution('torus'), 24)
        self.assertEqual(self.cfg.tolerance('flat'), 1e-9)

    def test_missing_file(self):
        self.cfg.reload(os.path.join(self.tmp.name, 'missing.ini'))
        with self.assertRaises(tf_cfg.ConfigError):
            self.cfg.check()

    def test_bad_values(self):
        self.write('[Resolution]\nloop = 2\n')
        self.cfg.reload(self.path)
        with self.assertRaises(tf_cfg.ConfigError):
            self.cfg.check()
        self.write('[Tolerance]\nbounding = -1\n')
        self.cfg.reload(self.path)
        with self.assertRaises(tf_cfg.ConfigError):
            self.cfg.check()
        self.write('[General]\nthreads = many\n')
        self.cfg.reload(self.path)
        with self.assertRaises(tf_cfg.ConfigError):
            self.cfg.check()

    def test_set_resolution(self):
        self.assertFalse(self.cfg.set_resolution(3))
        self.assertFalse(self.cfg.set_resolution('fine'))
        self.assertTrue(self.cfg.set_resolution(32))
        for key in ('sphere', 'loop', 'torus', 'instanton', 'fiber'):
            self.assertEqual(self.cfg.resolution(key), 32)
        self.assertEqual(self.cfg.resolution('transport_steps'), 4096)
        self.assertEqual(self.cfg.kvs['resolution_sphere'], '32')

    def test_threads_environment(self):
        with mock.patch.dict(os.environ, {tf_cfg.THREADS_ENV: '3'}):
            self.assertEqual(self.cfg.threads(), 3)
        with mock.patch.dict(os.environ, {tf_cfg.THREADS_ENV: '0'}):
            self.assertEqual(self.cfg.threads(), os.cpu_count() or 1)
        with mock.patch.dict(os.environ, {tf_cfg.THREADS_ENV: 'x'}):
            with self.assertRaises(tf_cfg.ConfigError):
                self.cfg.threads()

    def test_save_defaults(self):
        self.cfg.set_option('Resolution', 'sphere', 48)
        with contextlib.redirect_stdout(io.StringIO()):
            self.cfg.save_defaults()
        saved = tf_cfg.ChernforgeCfg(self.path)
        saved.check()
        self.assertEqual(saved.resolution('sphere'), 200)
        self.assertEqual(saved.tolerance('thin'), 1e-8)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
