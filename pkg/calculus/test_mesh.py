import math
import unittest

import numpy as np

from framework import manifolds
from geometry import mesh
from helpers import error

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'


class DomainTest(unittest.TestCase):

    def test_validation(self):
        with self.assertRaises(error.ArgumentError):
            mesh.ChartDomain([(0.0, 1.0)], resolution=3)
        with self.assertRaises(error.ArgumentError):
            mesh.ChartDomain([(1.0, 1.0)])
        with self.assertRaises(error.ArgumentError):
            mesh.ChartDomain([(0.0, 1.0)], [True], 8, [(0, mesh.LOWER)])

    def test_closed(self):
        self.assertTrue(manifolds.sphere(16).is_closed())
        self.assertTrue(manifolds.torus(3, 8).is_closed())
        self.assertTrue(manifolds.s4(8).is_closed())
        self.assertTrue(manifolds.point().is_closed())
        cap = mesh.ChartDomain([(0.0, 1.0), (0.0, 2.0 * math.pi)],
                               [False, True], 8, [(0, mesh.LOWER)])
        self.assertFalse(cap.is_closed())

    def test_steps(self):
        d = mesh.ChartDomain([(0.0, 1.0), (0.0, 4.0)], resolution=[4, 16])
        self.assertTrue(np.allclose(d.steps(), [1.0 / 32, 4.0 / 128]))

    def test_facet_and_product(self):
        s2 = manifolds.sphere(8)
        f = s2.facet(0)
        self.assertEqual(f.dimension, 1)
        self.assertEqual(f.periodic, (True,))
        p = manifolds.circle(8).product(s2)
        self.assertEqual(p.dimension, 3)
        self.assertEqual(p.collapsed, ((1, mesh.LOWER), (1, mesh.UPPER)))
        self.assertEqual(p, manifolds.suspension(s2, 8))

    def test_sample(self):
        d = manifolds.sphere(8)
        pts = d.sample(50, np.random.RandomState(0))
        self.assertEqual(pts.shape, (50, 2))
        self.assertTrue(np.all(pts[:, 0] > 0.0) and np.all(pts[:, 0] < math.pi))


class QuadratureTest(unittest.TestCase):

    def test_periodic_axis(self):
        d = mesh.ChartDomain([(0.0, 2.0 * math.pi)], [True], 8)
        x, w = mesh.quadrature_rule(d)
        self.assertEqual(x.shape, (8, 1))
        self.assertTrue(np.allclose(w, 2.0 * math.pi / 8, rtol=0, atol=1e-15))
        self.assertTrue(np.allclose(x[:, 0], np.arange(8) * math.pi / 4))

    def test_gauss_legendre_axis(self):
        d = mesh.ChartDomain([(0.0, 1.0)], [False], 4)
        x, w = mesh.quadrature_rule(d)
        self.assertAlmostEqual(w.sum(), 1.0, places=14)
        # 4 nodes integrate degree 7 exactly
        self.assertAlmostEqual(np.sum(x[:, 0] ** 7 * w), 1.0 / 8.0, places=14)
        self.assertTrue(np.allclose(np.sort(x[:, 0]), 1.0 - np.sort(x[:, 0])[::-1]))

    def test_weights_sum_to_volume(self):
        for d in (manifolds.sphere(12), manifolds.torus(3, 5), manifolds.s4(4),
                  mesh.ChartDomain([(-1.0, 2.0), (0.5, 0.75)], [False, True],
                                   [6, 9])):
            _, w = mesh.quadrature_rule(d)
            self.assertAlmostEqual(w.sum(), d.volume(), delta=1e-12)

    def test_point(self):
        x, w = mesh.quadrature_rule(manifolds.point())
        self.assertEqual(x.shape, (1, 0))
        self.assertEqual(list(w), [1.0])

    def test_spectral_periodic(self):
        d = mesh.ChartDomain([(0.0, 2.0 * math.pi)], [True], 16)
        x, w = mesh.quadrature_rule(d)
        self.assertAlmostEqual(np.sum(np.exp(np.cos(x[:, 0])) * w),
                               2.0 * math.pi * 1.2660658777520082, places=12)


class MapTest(unittest.TestCase):

    def test_central_difference(self):
        rng = np.random.RandomState(1)
        pts = rng.random_sample((10, 2)) * 3.0
        steps = np.array([0.005, 0.01])

        def fn(p):
            return np.sin(p[:, 0]) * np.exp(p[:, 1])
        d = mesh.central_difference(fn, pts, steps)
        self.assertEqual(d.shape, (10, 2))
        exact = np.stack([np.cos(pts[:, 0]) * np.exp(pts[:, 1]),
                          np.sin(pts[:, 0]) * np.exp(pts[:, 1])], axis=-1)
        self.assertLess(np.max(np.abs(d - exact)), 1e-8)

    def test_compose(self):
        outer = mesh.SmoothMap(
            2, 2, lambda p: np.stack([p[:, 0] * p[:, 1], p[:, 1] ** 2], axis=1),
            lambda p: np.stack([np.stack([p[:, 1], p[:, 0]], axis=1),
                                np.stack([0.0 * p[:, 0], 2.0 * p[:, 1]], axis=1)],
                               axis=1), 'outer')
        inner = mesh.SmoothMap(
            1, 2, lambda p: np.concatenate([np.cos(p), np.sin(p)], axis=1),
            lambda p: np.stack([-np.sin(p), np.cos(p)], axis=1), 'inner')
        both = outer.compose(inner)
        pts = np.array([[0.3], [1.1], [2.5]])
        analytic = both.jacobian(pts, None)
        numeric = mesh.central_difference(both, pts, np.array([0.01]))
        self.assertLess(np.max(np.abs(analytic - numeric)), 1e-9)
        with self.assertRaises(error.DomainError):
            inner.compose(outer)


class BoundaryTest(unittest.TestCase):

    def test_interval(self):
        chain = mesh.BoundedChain(mesh.ChartDomain([(0.0, 1.0)], None, 4),
                                  mesh.identity_map(1))
        pieces = mesh.boundary(chain).pieces
        self.assertEqual(len(pieces), 2)
        at = dict((float(p.target_map(np.zeros((1, 0)))[0, 0]), p.orientation)
                  for p in pieces)
        self.assertEqual(at, {1.0: 1, 0.0: -1})

    def test_square(self):
        chain = mesh.BoundedChain(mesh.ChartDomain([(0.0, 1.0), (0.0, 1.0)],
                                                   None, 4),
                                  mesh.identity_map(2))
        pieces = mesh.boundary(chain).pieces
        self.assertEqual([p.orientation for p in pieces], [1, -1, -1, 1])
        self.assertTrue(all(p.dimension == 1 for p in pieces))

    def test_cap(self):
        cap = mesh.BoundedChain(
            mesh.ChartDomain([(0.0, 1.0), (0.0, 2.0 * math.pi)], [False, True],
                             8, [(0, mesh.LOWER)]),
            mesh.identity_map(2))
        rim = mesh.boundary(cap)
        self.assertEqual(len(rim), 1)
        self.assertEqual(rim.pieces[0].orientation, 1)
        self.assertFalse(mesh.is_thin(rim))
        both = mesh.boundary(cap, keep_thin=True)
        self.assertEqual(len(both), 2)
        pole = [p for p in both if p.thin]
        self.assertEqual(len(pole), 1)
        self.assertTrue(mesh.is_thin(pole[0]))

    def test_degenerate_map_is_thin(self):
        const = mesh.SmoothMap(1, 2, lambda p: np.array([0.5, 0.5]),
                               lambda p: np.zeros((p.shape[0], 2, 1)), 'pt')
        z = mesh.GeometricCycle(manifolds.circle(8), const)
        self.assertTrue(mesh.is_thin(z))

    def test_closed_has_no_boundary(self):
        z = mesh.fundamental_cycle(manifolds.torus(2, 8))
        with self.assertRaises(error.ArgumentError):
            mesh.boundary(z)
        with self.assertRaises(error.ArgumentError):
            mesh.BoundedChain(manifolds.torus(2, 8), mesh.identity_map(2))
        with self.assertRaises(error.ArgumentError):
            mesh.fundamental_cycle(mesh.ChartDomain([(0.0, 1.0)], None, 4))

    def test_circle_product(self):
        z = mesh.fundamental_cycle(manifolds.circle(8), 'S1')
        p = mesh.circle_product(z, 12)
        self.assertEqual(p.dimension, 2)
        self.assertEqual(p.domain.resolution, (12, 8))
        pts = np.array([[0.5, 1.5]])
        self.assertTrue(np.allclose(p.target_map(pts), pts))
        self.assertTrue(np.allclose(p.target_map.jacobian(pts, None)[0],
                                    np.eye(2)))

    def test_orientation(self):
        z = mesh.fundamental_cycle(manifolds.circle(8))
        self.assertEqual(z.reversed().orientation, -1)
        self.assertEqual(z.reversed().reversed().orientation, 1)
        with self.assertRaises(error.ArgumentError):
            mesh.GeometricCycle(z.domain, z.target_map, 2)
        disc = mesh.ChartDomain([(0.0, 1.0), (0.0, 2.0 * math.pi)], [False, True],
                                8, [(0, mesh.LOWER)])
        chain = mesh.BoundedChain(disc, mesh.identity_map(2), -1)
        self.assertEqual(chain.reversed().orientation, 1)
        for bad in (0, 2, -3):
            with self.assertRaises(error.ArgumentError):
                mesh.BoundedChain(disc, mesh.identity_map(2), bad)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
