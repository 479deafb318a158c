import math

import numpy as np

from framework import bundles, specs, tester
from geometry import charforms, forms, mesh
from helpers import error

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'


def build(text):
    return bundles.build_bundle(specs.parse(text))


def skew_sample(matrix):
    """Constant skew matrix as a 0-form sample at one point."""
    values = np.asarray(matrix, dtype=complex)[None, None]
    return forms.FormSample(0, 2, values)


class PfaffianTest(tester.GeometryTest):

    def test_matchings(self):
        four = list(charforms.perfect_matchings(4))
        self.assertEqual(four, [(((0, 1), (2, 3)), 1),
                                (((0, 2), (1, 3)), -1),
                                (((0, 3), (1, 2)), 1)])
        self.assertEqual(len(list(charforms.perfect_matchings(6))), 15)
        self.assertEqual(list(charforms.perfect_matchings(2)),
                         [(((0, 1),), 1)])

    def test_square_is_determinant(self):
        for size in (2, 4, 6):
            a = self.rng.standard_normal((size, size))
            a = a - a.T
            pf = charforms.pfaffian_sample(skew_sample(a)).values[0, 0, 0, 0]
            pf *= (2.0 * math.pi) ** (size // 2)
            self.assertAlmostEqual(pf.real ** 2, np.linalg.det(a), places=9)
            self.assertAlmostEqual(pf.imag, 0.0, places=12)

    def test_block_diagonal(self):
        a = np.zeros((4, 4))
        a[0, 1], a[1, 0] = 2.0, -2.0
        a[2, 3], a[3, 2] = 3.0, -3.0
        pf = charforms.pfaffian_sample(skew_sample(a)).values[0, 0, 0, 0]
        self.assertAlmostEqual(pf.real, 6.0 / (2.0 * math.pi) ** 2, places=14)


class TangentSphereTest(tester.GeometryTest):

    resolution = {'sphere': 32}

    def test_pointwise(self):
        b = build('ts2')
        points = self.sample(b.base)
        e = charforms.euler_form(b)
        self.assertEqual(e.degree, 2)
        values = e(points)[:, 0, 0, 0]
        self.assertLess(np.max(np.abs(values - np.sin(points[:, 0])
                                      / (2.0 * math.pi))), 1e-14)

    def test_integral(self):
        b = build('ts2')
        total = forms.integrate(charforms.euler_form(b),
                                mesh.fundamental_cycle(b.base))
        self.assertAlmostEqual(total.real, 2.0, places=10)

    def test_first_pontryagin_vanishes(self):
        b = build('ts2')
        self.assertTrue(charforms.pontryagin_form(b, 1).is_zero_by_degree())


class EulerErrorTest(tester.GeometryTest):

    resolution = {'torus': 8, 'sphere': 16}

    def test_structure(self):
        with self.assertRaises(error.ArgumentError):
            charforms.euler_form(build('monopole'))
        with self.assertRaises(error.ArgumentError):
            charforms.euler_form(build('so3-torus'))
        with self.assertRaises(error.ArgumentError):
            charforms.euler_form(build('trivial:rank=8,so=1'))

    def test_degree_above_dimension(self):
        e = charforms.euler_form(build('trivial:rank=4,so=1'))
        self.assertEqual(e.degree, 4)
        self.assertTrue(e.is_zero_by_degree())

    def test_flat_vanishes(self):
        b = build('trivial:rank=2,so=1')
        self.assertSupLess(charforms.euler_form(b), self.sample(b.base), 1e-300)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
