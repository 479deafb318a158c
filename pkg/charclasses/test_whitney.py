from framework import bundles, specs, tester
from geometry import charforms, connections, forms, mesh

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'


def build(text):
    return bundles.build_bundle(specs.parse(text))


class WhitneyTest(tester.GeometryTest):

    resolution = {'torus': 8, 'sphere': 32}

    def check_product(self, a, b, points):
        total = charforms.total_chern_form(connections.direct_sum(a, b))
        product = charforms.wedge_total(charforms.total_chern_form(a),
                                        charforms.total_chern_form(b))
        self.assertEqual(len(total), len(product))
        for k, (lhs, rhs) in enumerate(zip(total, product)):
            self.assertEqual(lhs.degree, 2 * k)
            self.assertFormsClose(lhs, rhs, points, 1e-12, 'c_%d' % k)

    def test_line_and_plane(self):
        a = build('torus-random:seed=1,rank=1,dim=4')
        b = build('torus-random:seed=2,rank=2,dim=4')
        self.check_product(a, b, self.sample(a.base, 8))

    def test_planes(self):
        a = build('torus-random:seed=3,dim=4')
        b = build('torus-random:seed=4,dim=4')
        self.check_product(a, b, self.sample(a.base, 8))

    def test_flat_summand(self):
        a = build('torus-random:seed=5,dim=4')
        flat = connections.flat_bundle(a.base, 2)
        points = self.sample(a.base, 8)
        total = charforms.total_chern_form(connections.direct_sum(a, flat))
        for k, c in enumerate(charforms.total_chern_form(a)):
            self.assertFormsClose(total[k], c, points, 1e-13)

    def test_monopole_charges_add(self):
        s = connections.direct_sum(build('monopole:n=1'), build('monopole:n=2'))
        c = charforms.total_chern_form(s)
        self.assertEqual(len(c), 2)
        flux = forms.integrate(c[1], mesh.fundamental_cycle(s.base))
        self.assertAlmostEqual(flux.real, 3.0, places=10)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
