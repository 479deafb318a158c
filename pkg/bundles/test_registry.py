import numpy as np

from framework import bundles, specs, tester
from geometry import connections
from helpers import error

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'


def build(text, base=None):
    return bundles.build_bundle(specs.parse(text), base)


class RegistryTest(tester.GeometryTest):

    resolution = {'sphere': 16, 'torus': 8, 'fiber': 16, 'loop': 16}

    def test_names(self):
        self.assertEqual(bundles.bundle_names(),
                         ['instanton', 'monopole', 'so3-torus', 'suspension',
                          'torus-flat', 'torus-random', 'trivial', 'ts2'])

    def test_build_all(self):
        # the instanton lambdifies quaternion derivatives and has its own test
        for name in bundles.bundle_names():
            if name == 'instanton':
                continue
            b = build(name)
            self.assertIsInstance(b, connections.BundleWithConnection)
            self.assertLess(connections.check_structure(b), 1e-10, name)

    def test_names_of_bundles(self):
        self.assertEqual(build('monopole:n=2').name, 'L2')
        self.assertEqual(build('torus-random:seed=3').name, 'U2[3]')
        self.assertEqual(build('so3-torus:seed=1').name, 'SO3[1]')
        self.assertEqual(build('ts2').name, 'TS2')

    def test_structures(self):
        self.assertEqual(build('ts2').structure,
                         connections.SPECIAL_ORTHOGONAL)
        self.assertEqual(build('so3-torus').structure,
                         connections.SPECIAL_ORTHOGONAL)
        self.assertEqual(build('trivial:rank=2,so=1').structure,
                         connections.SPECIAL_ORTHOGONAL)
        self.assertEqual(build('monopole').structure, connections.UNITARY)

    def test_trivial_base(self):
        self.assertEqual(build('trivial').base.dimension, 2)
        self.assertEqual(build('trivial:base=sphere').base.dimension, 2)
        self.assertEqual(build('trivial:dim=3').base.dimension, 3)
        hint = build('monopole').base
        self.assertEqual(build('trivial:rank=3', hint).base, hint)

    def test_seeded(self):
        a = build('torus-random:seed=5')
        b = build('torus-random:seed=5')
        c = build('torus-random:seed=6')
        points = self.sample(a.base)
        self.assertTrue(np.array_equal(a.connection()(points),
                                       b.connection()(points)))
        self.assertFalse(np.allclose(a.connection()(points),
                                     c.connection()(points)))

    def test_flat_torus(self):
        b = build('torus-flat:a=1/4,b=-2')
        values = b.connection()(self.sample(b.base))
        self.assertTrue(np.allclose(values[:, 0, 0, 0], 0.25j))
        self.assertTrue(np.allclose(values[:, 1, 0, 0], -2.0j))

    def test_errors(self):
        with self.assertRaises(error.SpecError):
            build('moebius')
        with self.assertRaises(error.SpecError):
            build('monopole:k=1')
        with self.assertRaises(error.SpecError):
            build('monopole:n=1/2')
        with self.assertRaises(error.SpecError):
            build('instanton:scale=0')
        with self.assertRaises(error.SpecError):
            build('torus-random:seed=abc')


class InstantonTest(tester.GeometryTest):

    resolution = {'instanton': 6}

    def test_builds(self):
        b = build('instanton')
        self.assertEqual(b.name, 'BPST')
        self.assertEqual(b.rank, 2)
        self.assertEqual(b.base.dimension, 4)
        self.assertLess(connections.check_structure(b), 1e-10)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
