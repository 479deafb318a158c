import math

import sympy

from framework import manifolds, tester
from geometry import forms, mesh, symbolic

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'


def both_sides(omega, chain, keep_thin=False):
    inside = forms.integrate(forms.exterior_derivative(omega), chain)
    rim = forms.integrate(omega, mesh.boundary(chain, keep_thin))
    return inside, rim


class StokesTest(tester.GeometryTest):

    def test_interval(self):
        line = mesh.ChartDomain([(0.0, 1.0)], None, 16)
        x = sympy.Symbol('x', real=True)
        f = symbolic.form(line, 0, [x], {(): x ** 3 + sympy.sin(x)})
        chain = mesh.BoundedChain(line, mesh.identity_map(1))
        inside, rim = both_sides(f, chain)
        self.assertAlmostEqual(inside.real, 1.0 + math.sin(1.0), places=12)
        self.assertAlmostEqual(rim.real, 1.0 + math.sin(1.0), places=12)

    def test_square(self):
        t2 = manifolds.torus(2, 16)
        x, y = sympy.symbols('x y', real=True)
        omega = symbolic.form(t2, 1, [x, y],
                              {(0,): sympy.sin(y) * x ** 2,
                               (1,): sympy.cos(x) * sympy.exp(y / 3)})
        chain = mesh.BoundedChain(
            mesh.ChartDomain([(0.5, 1.5), (0.3, 1.8)], None, 16),
            mesh.identity_map(2))
        inside, rim = both_sides(omega, chain)
        self.assertGreater(abs(inside), 0.1)
        self.assertAlmostEqual(inside, rim, places=10)
        inside, rim = both_sides(omega, chain.reversed())
        self.assertAlmostEqual(inside, rim, places=10)

    def test_cap(self):
        s2 = manifolds.sphere(32)
        t, p = sympy.symbols('theta phi', real=True)
        omega = symbolic.form(s2, 1, [t, p], {(1,): 1 - sympy.cos(t)})
        for theta0 in (0.4, math.pi / 2, 2.5):
            chain = mesh.BoundedChain(
                mesh.ChartDomain([(0.0, theta0), (0.0, 2.0 * math.pi)],
                                 [False, True], 32, [(0, mesh.LOWER)]),
                mesh.identity_map(2))
            inside, rim = both_sides(omega, chain)
            expected = 2.0 * math.pi * (1.0 - math.cos(theta0))
            self.assertAlmostEqual(inside.real, expected, places=10)
            self.assertAlmostEqual(rim.real, expected, places=10)

    def test_collapsed_facet_carries_singularity(self):
        """cos(theta) dphi does not vanish at the pole: the collapsed facet
        has to be kept for the boundary to balance."""
        s2 = manifolds.sphere(32)
        t, p = sympy.symbols('theta phi', real=True)
        omega = symbolic.form(s2, 1, [t, p], {(1,): sympy.cos(t)})
        chain = mesh.BoundedChain(
            mesh.ChartDomain([(0.0, 1.0), (0.0, 2.0 * math.pi)],
                             [False, True], 32, [(0, mesh.LOWER)]),
            mesh.identity_map(2))
        inside, rim = both_sides(omega, chain)
        self.assertAlmostEqual(rim.real - inside.real, 2.0 * math.pi, places=10)
        inside, rim = both_sides(omega, chain, keep_thin=True)
        self.assertAlmostEqual(inside, rim, places=10)

    def test_closed_torus(self):
        t2 = manifolds.torus(2, 16)
        x, y = sympy.symbols('x y', real=True)
        omega = symbolic.form(t2, 1, [x, y],
                              {(0,): sympy.sin(x + 2 * y),
                               (1,): sympy.cos(x) ** 2 * sympy.sin(y)})
        total = forms.integrate(forms.exterior_derivative(omega),
                                mesh.fundamental_cycle(t2))
        self.assertAlmostEqual(abs(total), 0.0, places=12)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
