import os
import unittest
from unittest import mock

import numpy as np

from helpers import error, tf_cfg, workers

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'


class WorkersTest(unittest.TestCase):

    def setUp(self):
        self.chunk = tf_cfg.cfg.get('General', 'chunk')

    def tearDown(self):
        tf_cfg.cfg.set_option('General', 'chunk', self.chunk)

    def test_chunks(self):
        self.assertEqual(workers.chunks(10, 4),
                         [slice(0, 4), slice(4, 8), slice(8, 10)])
        self.assertEqual(workers.chunks(0, 4), [])

    def test_map_ordered(self):
        with mock.patch.dict(os.environ, {tf_cfg.THREADS_ENV: '4'}):
            self.assertEqual(workers.map_ordered(lambda x: x * x, range(20)),
                             [x * x for x in range(20)])

    def test_evaluate_chunked(self):
        tf_cfg.cfg.set_option('General', 'chunk', 7)
        points = np.linspace(0.0, 1.0, 30)[:, None]
        out = workers.evaluate_chunked(lambda p: np.sin(p[:, 0]), points)
        self.assertTrue(np.array_equal(out, np.sin(points[:, 0])))
        with self.assertRaises(error.Error):
            workers.evaluate_chunked(lambda p: p[:1, 0], points)

    def test_reduction_independent_of_threads(self):
        """Same sum, bit for bit, whatever the number of threads."""
        tf_cfg.cfg.set_option('General', 'chunk', 97)
        rng = np.random.RandomState(5)
        points = rng.random_sample((1000, 2))
        weights = rng.random_sample(1000)

        def fn(p):
            return np.exp(1j * p[:, 0]) * np.cos(3.0 * p[:, 1])
        sums = []
        for threads in ('1', '3', '8'):
            with mock.patch.dict(os.environ, {tf_cfg.THREADS_ENV: threads}):
                sums.append(workers.weighted_sum(fn, points, weights))
        self.assertEqual(sums[0], sums[1])
        self.assertEqual(sums[0], sums[2])
        self.assertAlmostEqual(sums[0], np.sum(fn(points) * weights),
                               places=10)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
