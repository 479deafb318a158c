import math

import numpy as np
import sympy

from framework import bundles, characters, cycles, manifolds, specs, tester
from geometry import connections, diffchar, forms, mesh, symbolic
from helpers import error

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'


def build(text):
    return bundles.build_bundle(specs.parse(text))


def cycle(text, b):
    return cycles.build_cycle(specs.parse(text), b)


def holonomy_phase(b, loop):
    U = connections.parallel_transport(b, loop)
    return diffchar.frac(-np.angle(np.linalg.det(U)) / (2.0 * math.pi))


class CircleTest(tester.GeometryTest):

    def test_frac(self):
        self.assertEqual(diffchar.frac(2.25), 0.25)
        self.assertEqual(diffchar.frac(-0.25), 0.75)
        self.assertEqual(diffchar.frac(3.0), 0.0)
        self.assertEqual(diffchar.frac(-1e-18), 0.0)
        self.assertLess(diffchar.frac(-1e-18), 1.0)

    def test_distance(self):
        self.assertAlmostEqual(diffchar.circle_distance(0.95, 0.05), 0.1)
        self.assertAlmostEqual(diffchar.circle_distance(0.2, 3.2), 0.0)
        self.assertAlmostEqual(diffchar.circle_distance(0.0, 0.5), 0.5)


class LatitudeTest(tester.GeometryTest):

    resolution = {'sphere': 48}

    def test_analytic_values(self):
        for n in (1, 2, -1, 3):
            b = build('monopole:n=%d' % n)
            f = diffchar.differential_chern(b, 1)
            for theta0 in (math.pi / 6, 1.0, math.pi / 2, 2.5):
                z = cycle('latitude:theta0=%r' % theta0, b)
                self.assertCircleAlmostEqual(
                    f(z), n * (1.0 - math.cos(theta0)) / 2.0, 1e-10)

    def test_holonomy_oracle(self):
        b = build('monopole:n=2')
        f = diffchar.differential_chern(b, 1)
        for theta0 in (0.4, 1.3, 2.8):
            z = cycle('latitude:theta0=%r' % theta0, b)
            self.assertCircleAlmostEqual(f(z), holonomy_phase(b, z), 1e-9)

    def test_holonomy_oracle_rank_two(self):
        b = build('torus-random:seed=9')
        f = diffchar.differential_chern(b, 1)
        for text in ('torus-loop:p=1,q=0', 'torus-loop:p=2,q=1,x0=0.5'):
            z = cycle(text, b)
            self.assertCircleAlmostEqual(f(z), holonomy_phase(b, z), 1e-8)

    def test_frame_winding(self):
        b = build('monopole:n=1')
        f = diffchar.differential_chern(b, 1)
        value = f(cycle('latitude:theta0=1.2', b))
        for w in (-2, -1, 1, 3):
            z = cycle('latitude:theta0=1.2,w=%d' % w, b)
            self.assertCircleAlmostEqual(f(z), value, 1e-9)
            self.assertAlmostEqual(f.lift(z) - f.lift(cycle('latitude:theta0=1.2',
                                                            b)), -w, places=8)

    def test_orientation(self):
        b = build('monopole:n=1')
        f = diffchar.differential_chern(b, 1)
        z = cycle('latitude:theta0=0.9', b)
        self.assertCircleAlmostEqual(f(z.reversed()), -f(z), 1e-12)
        u = sympy.Symbol('u', real=True)
        wobble = symbolic.smooth_map([u], [u + sympy.sin(u) / 3], 'wobble')
        self.assertCircleAlmostEqual(f(z.reparametrized(wobble)), f(z), 1e-8)

    def test_union_is_additive(self):
        b = build('monopole:n=1')
        f = diffchar.differential_chern(b, 1)
        a = cycle('latitude:theta0=0.7', b)
        c = cycle('latitude:theta0=2.0', b)
        both = mesh.CycleUnion([a, c])
        self.assertCircleAlmostEqual(f(both), f(a) + f(c), 1e-12)

    def test_sum_of_characters(self):
        a, b = build('monopole:n=1'), build('monopole:n=2')
        s = connections.direct_sum(a, b)
        z = cycle('latitude:theta0=1.1', s)
        total = diffchar.differential_chern(a, 1) + diffchar.differential_chern(b, 1)
        self.assertCircleAlmostEqual(total(cycle('latitude:theta0=1.1', a)),
                                     diffchar.differential_chern(s, 1)(z), 1e-10)
        diff = diffchar.differential_chern(b, 1) - diffchar.differential_chern(a, 1)
        self.assertCircleAlmostEqual(diff(z), (1.0 - math.cos(1.1)) / 2.0, 1e-10)


class BoundingTest(tester.GeometryTest):

    resolution = {'sphere': 48}

    def test_caps(self):
        for text in ('monopole:n=1', 'monopole:n=-2'):
            b = build(text)
            f = diffchar.differential_chern(b, 1)
            for theta0 in (0.3, 1.5, 2.9):
                self.assertLess(diffchar.bounding_residual(
                    f, cycles.cap_chain(theta0, b)), 1e-9)

    def test_euler_caps(self):
        b = build('ts2')
        f = diffchar.differential_euler(b)
        for theta0, expected in ((math.pi / 2, 0.0), (2 * math.pi / 3, 0.5),
                                 (1.0, 1.0 - math.cos(1.0))):
            chain = cycles.cap_chain(theta0, b)
            self.assertLess(diffchar.bounding_residual(f, chain), 1e-9)
            self.assertCircleAlmostEqual(f(mesh.boundary(chain)), expected, 1e-9)

    def test_polar_gauge(self):
        b = build('monopole:n=1')
        for theta0 in (0.3, math.pi / 2, 2.9):
            self.assertEqual(cycles.cap_chain(theta0, b).trivialization.gauge,
                             'north')
            z = cycle('latitude:theta0=%r' % theta0, b)
            self.assertEqual(z.trivialization.gauge, 'north')
        flat = build('torus-random:seed=2')
        self.assertIsNone(cycles.polar_gauge(flat))

    def test_thin_facet(self):
        b = build('monopole:n=1')
        f = diffchar.differential_chern(b, 1)
        chain = cycles.cap_chain(1.0, b)
        pole = [p for p in mesh.boundary(chain, keep_thin=True) if p.thin]
        self.assertEqual(len(pole), 1)
        self.assertCircleAlmostEqual(f(pole[0]), 0.0, 1e-12)

    def test_square_in_torus(self):
        b = build('torus-random:seed=2')
        f = diffchar.differential_chern(b, 1)
        chain = cycles.build_cycle(specs.parse('square:a=1.5,x0=1,y0=2'), b)
        self.assertLess(diffchar.bounding_residual(f, chain), 1e-8)


class FormCharacterTest(tester.GeometryTest):

    resolution = {'torus': 16}

    def test_from_form(self):
        t2 = manifolds.torus(2)
        x, y = sympy.symbols('x1 x2', real=True)
        alpha = symbolic.form(t2, 1, [x, y], {(0,): 0.3 + sympy.sin(y),
                                              (1,): sympy.cos(x) / 5})
        f = diffchar.from_form(alpha)
        self.assertEqual(f.degree, 2)
        b = connections.flat_bundle(t2)
        loop = cycle('torus-loop:p=1,q=0,y0=0', b)
        self.assertCircleAlmostEqual(f(loop), 0.6 * math.pi, 1e-12)
        points = self.sample(t2)
        self.assertFormsClose(f.curvature, forms.exterior_derivative(alpha),
                              points, 1e-15)

    def test_zero_character(self):
        t2 = manifolds.torus(2)
        f = diffchar.zero_character(t2, 2)
        loop = cycle('torus-loop:p=1,q=1', connections.flat_bundle(t2))
        self.assertEqual(f(loop), 0.0)

    def test_top_degree_form(self):
        t2 = manifolds.torus(2)
        area = forms.from_constant(t2, 2, {(0, 1): 1.0 / (8 * math.pi ** 2)})
        f = diffchar.from_form(area)
        self.assertEqual(f.degree, 3)
        self.assertTrue(f.curvature.is_zero_by_degree())
        self.assertCircleAlmostEqual(f(mesh.fundamental_cycle(t2)), 0.5, 1e-12)

    def test_errors(self):
        t2 = manifolds.torus(2)
        with self.assertRaises(error.ArgumentError):
            diffchar.from_form(forms.from_constant(t2, 1, {(0,): 1j}, 2))
        f = diffchar.from_form(forms.from_constant(t2, 1, {(0,): 1.0}))
        g = diffchar.from_form(forms.zero_form(0, t2))
        with self.assertRaises(error.DegreeError):
            f + g
        with self.assertRaises(error.DegreeError):
            f(mesh.fundamental_cycle(t2))
        with self.assertRaises(error.DegreeError):
            diffchar.DifferentialCharacter(3, forms.zero_form(2, t2),
                                           lambda piece: 0.0)


class PontryaginCharacterTest(tester.GeometryTest):

    resolution = {'torus': 8}

    def setUp(self):
        tester.GeometryTest.setUp(self)
        self.b = build('so3-torus:seed=1')
        self.f = diffchar.differential_pontryagin(self.b, 1)
        self.z = cycle('torus', self.b)

    def test_degree(self):
        self.assertEqual(self.f.degree, 4)
        self.assertEqual(self.f.curvature.degree, 4)
        self.assertTrue(self.f.curvature.is_zero_by_degree())
        self.assertEqual(self.z.dimension, 3)

    def test_homotopic_cycles(self):
        """A translated fundamental cycle is homotopic to it, and the
        curvature vanishes on T^3, so the values agree."""
        value = self.f(self.z)
        self.assertGreater(diffchar.circle_distance(value, 0.0), 1e-3)
        xs = bundles.coordinates(3)
        for shift in ((0.7, -1.1, 2.0), (math.pi, 0.0, 0.25)):
            move = symbolic.smooth_map(xs, [x + c for x, c in zip(xs, shift)],
                                       'shift')
            self.assertCircleAlmostEqual(self.f(self.z.push(move)), value, 1e-9)

    def test_orientation(self):
        self.assertCircleAlmostEqual(self.f(self.z.reversed()), -self.f(self.z),
                                     1e-12)


class ErrorTest(tester.GeometryTest):

    resolution = {'sphere': 32}

    def test_untrivialized(self):
        b = build('monopole')
        z = cycle('latitude', b)
        bare = mesh.GeometricCycle(z.domain, z.target_map, name='bare')
        with self.assertRaises(error.TrivializationError):
            diffchar.differential_chern(b, 1)(bare)

    def test_periods(self):
        b = build('monopole:n=2')
        f = diffchar.differential_chern(b, 1)
        sphere = cycle('sphere', b)
        self.assertEqual(diffchar.delta2_periods(f, [sphere]), [2])
        t2 = manifolds.torus(2)
        area = forms.from_constant(t2, 2, {(0, 1): 0.3 / (4 * math.pi ** 2)})
        odd = diffchar.DifferentialCharacter(2, area, lambda piece: 0.0, 'odd')
        z = mesh.fundamental_cycle(t2, 'T2')
        with self.assertRaises(error.IntegralityError) as ctx:
            diffchar.delta2_periods(odd, [z])
        self.assertAlmostEqual(ctx.exception.period, 0.3, places=12)
        self.assertIs(ctx.exception.cycle, z)
        with self.assertRaises(error.DegreeError):
            diffchar.delta2_periods(f, [cycle('latitude', b)])

    def test_structure(self):
        with self.assertRaises(error.ArgumentError):
            diffchar.differential_chern(build('ts2'), 1)
        with self.assertRaises(error.ArgumentError):
            diffchar.differential_chern(build('monopole'), 0)
        with self.assertRaises(error.ArgumentError):
            diffchar.differential_pontryagin(build('monopole'), 1)
        with self.assertRaises(error.ArgumentError):
            diffchar.differential_euler(build('monopole'))

    def test_registry(self):
        self.assertEqual(characters.character_names(),
                         ['chern', 'euler', 'fl-chern', 'odd-chern',
                          'pontryagin'])
        with self.assertRaises(error.SpecError):
            characters.evaluate('chern:k=1', 'latitude')
        with self.assertRaises(error.SpecError):
            characters.evaluate('stiefel:bundle=ts2', 'latitude')
        _, _, value = characters.evaluate('chern:k=1,bundle=monopole:n=1',
                                          'latitude:theta0=pi/2')
        self.assertCircleAlmostEqual(value, 0.5, 1e-10)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
