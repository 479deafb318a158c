"""
Registry of the built-in bundles with connections.

Every factory takes the parsed spec and an optional base hint (the chart of
the cycle the bundle is going to be evaluated on) and returns a validated
BundleWithConnection.
"""
import numpy as np
import sympy

from geometry import connections, diffchar, symbolic
from helpers import error, tf_cfg
from . import manifolds

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'

bundle_defs = {}


class BundleDef(object):

    def __init__(self, name, factory, params, description):
        self.name = name
        self.factory = factory
        self.params = params
        self.description = description


def register_bundle(name, factory, params=(), description=''):
    """ Register bundle type """
    tf_cfg.dbg(3, "Registering bundle %s" % name)
    bundle_defs[name] = BundleDef(name, factory, tuple(params), description)


def bundle_names():
    return sorted(bundle_defs)


def build_bundle(spec, base=None):
    try:
        bdef = bundle_defs[spec.name]
    except KeyError:
        raise error.SpecError('unknown bundle %r, known: %s'
                              % (spec.name, ', '.join(bundle_names())),
                              spec.text, 0)
    spec.check_keys(bdef.params)
    tf_cfg.dbg(2, "\tBuilding bundle %s %s" % (spec.name, spec.params))
    return connections.validate(bdef.factory(spec, base))


def coordinates(dim, names=None):
    names = names or ' '.join('x%d' % i for i in range(1, dim + 1))
    if dim == 0:
        return []
    symbols = sympy.symbols(names, real=True)
    return list(symbols) if dim > 1 else [symbols]


def number(value):
    return sympy.nsimplify(value) if float(value).is_integer() \
        else sympy.Float(value)


def trivial(spec, base=None):
    rank = spec.integer('rank', 1)
    structure = (connections.SPECIAL_ORTHOGONAL if spec.integer('so', 0)
                 else connections.UNITARY)
    name = spec.identifier('base')
    if name is not None:
        base = manifolds.by_name(name, spec.integer('dim', None))
    elif base is None:
        base = manifolds.torus(spec.integer('dim', 2))
    return connections.flat_bundle(base, rank, structure, 'trivial%d' % rank)


def monopole(spec, base=None):
    """Charge n line bundle on S^2, north and south gauges."""
    n = spec.integer('n', 1)
    base = manifolds.sphere()
    t, p = coordinates(2, 'theta phi')
    north = symbolic.form(base, 1, [t, p],
                          {(1,): -sympy.I * n * (1 - sympy.cos(t)) / 2},
                          1, 'theta_N')
    south = symbolic.form(base, 1, [t, p],
                          {(1,): sympy.I * n * (1 + sympy.cos(t)) / 2},
                          1, 'theta_S')
    g, _ = symbolic.matrix_function([t, p],
                                    sympy.Matrix([[sympy.exp(-sympy.I * n * p)]]))
    gauges = [connections.Gauge('north', north,
                                lambda points: points[:, 0] < manifolds.PI),
              connections.Gauge('south', south,
                                lambda points: points[:, 0] > 0.0)]
    seam = connections.Transition('north', 'south', g, base)
    return connections.BundleWithConnection(1, connections.UNITARY, base,
                                            gauges, [seam], 'L%d' % n)


def unit_quaternion(alpha, beta, gamma):
    """SU(2) matrix of the unit quaternion in hyperspherical coordinates."""
    x0 = sympy.cos(alpha)
    x1 = sympy.sin(alpha) * sympy.cos(beta)
    x2 = sympy.sin(alpha) * sympy.sin(beta) * sympy.cos(gamma)
    x3 = sympy.sin(alpha) * sympy.sin(beta) * sympy.sin(gamma)
    return sympy.Matrix([[x0 + sympy.I * x1, x2 + sympy.I * x3],
                         [-x2 + sympy.I * x3, x0 - sympy.I * x1]])


def instanton(spec, base=None):
    """SU(2) instanton of scale rho on S^4: A = f(chi) n^-1 dn.

    f = sin^2(chi/2) / (sin^2(chi/2) + rho^2 cos^2(chi/2)) vanishes at the
    north pole; the south gauge (f - 1) dn n^-1 is regular at chi = pi.
    """
    rho = number(spec.number('scale', 1))
    if float(rho) <= 0:
        raise error.SpecError('instanton scale must be positive', spec.text,
                              spec.text.find('scale='))
    base = manifolds.s4()
    chi, a, b, c = coordinates(4, 'chi alpha beta gamma')
    n = unit_quaternion(a, b, c)
    nh = n.H
    s2 = sympy.sin(chi / 2) ** 2
    f = s2 / (s2 + rho ** 2 * sympy.cos(chi / 2) ** 2)
    north, south = {}, {}
    for axis, x in ((1, a), (2, b), (3, c)):
        dn = sympy.diff(n, x)
        north[(axis,)] = f * (nh * dn)
        south[(axis,)] = (f - 1) * (dn * nh)
    symbols = [chi, a, b, c]
    g, _ = symbolic.matrix_function(symbols, n)
    gauges = [connections.Gauge('north',
                                symbolic.form(base, 1, symbols, north, 2,
                                              'A_N'),
                                lambda points: points[:, 0] < manifolds.PI),
              connections.Gauge('south',
                                symbolic.form(base, 1, symbols, south, 2,
                                              'A_S'),
                                lambda points: points[:, 0] > 0.0)]
    seam = connections.Transition('north', 'south', g, base)
    return connections.BundleWithConnection(2, connections.UNITARY, base,
                                            gauges, [seam], 'BPST')


def ts2(spec, base=None):
    """Tangent bundle of S^2, Levi-Civita connection in the frame e_theta,
    e_phi / sin(theta)."""
    base = manifolds.sphere()
    t, p = coordinates(2, 'theta phi')
    theta = sympy.Matrix([[0, -sympy.cos(t)], [sympy.cos(t), 0]])
    conn = symbolic.form(base, 1, [t, p], {(1,): theta}, 2, 'theta_LC')
    return connections.BundleWithConnection(2, connections.SPECIAL_ORTHOGONAL,
                                            base,
                                            [connections.Gauge('frame', conn)],
                                            name='TS2')


def torus_flat(spec, base=None):
    """theta = i (a dx + b dy) on T^2."""
    a = number(spec.number('a', 0))
    b = number(spec.number('b', 0))
    base = manifolds.torus(2)
    xs = coordinates(2)
    conn = symbolic.form(base, 1, xs, {(0,): sympy.I * a, (1,): sympy.I * b},
                         1, 'theta_flat')
    return connections.BundleWithConnection(1, connections.UNITARY, base,
                                            [connections.Gauge('global', conn)],
                                            name='flat(%s,%s)' % (a, b))


def trig_polynomial(rng, xs, modes, terms, amplitude):
    """Random real trigonometric polynomial in the torus coordinates."""
    expr = sympy.S.Zero
    for _ in range(terms):
        k = rng.randint(-modes, modes + 1, size=len(xs))
        phase = sum(int(ki) * x for ki, x in zip(k, xs))
        a, b = amplitude * rng.uniform(-1.0, 1.0, size=2)
        expr += sympy.Float(a) * sympy.cos(phase) + sympy.Float(b) * sympy.sin(phase)
    return expr


def random_connection(rng, xs, rank, structure, modes=1, terms=2,
                      amplitude=0.5):
    """Components {(axis,): matrix} of a random u(r) or so(r) connection."""
    comps = {}
    for axis in range(len(xs)):
        m = sympy.zeros(rank, rank)
        for i in range(rank):
            for j in range(i, rank):
                re = trig_polynomial(rng, xs, modes, terms, amplitude)
                if structure == connections.SPECIAL_ORTHOGONAL:
                    if i != j:
                        m[i, j] = re
                        m[j, i] = -re
                    continue
                if i == j:
                    m[i, i] = sympy.I * re
                    continue
                im = trig_polynomial(rng, xs, modes, terms, amplitude)
                # i H with H Hermitian
                m[i, j] = sympy.I * (re + sympy.I * im)
                m[j, i] = sympy.I * (re - sympy.I * im)
        comps[(axis,)] = m
    return comps


def torus_random(spec, base=None):
    """Random U(r) connection with trigonometric polynomial coefficients."""
    seed = spec.integer('seed', 0)
    rank = spec.integer('rank', 2)
    dim = spec.integer('dim', 2)
    rng = np.random.RandomState(seed)
    base = manifolds.torus(dim)
    xs = coordinates(dim)
    comps = random_connection(rng, xs, rank, connections.UNITARY,
                              spec.integer('modes', 1), 2,
                              spec.number('amp', 0.5))
    conn = symbolic.form(base, 1, xs, comps, rank, 'theta_rand%d' % seed)
    return connections.BundleWithConnection(rank, connections.UNITARY, base,
                                            [connections.Gauge('global', conn)],
                                            name='U%d[%d]' % (rank, seed))


def so3_torus(spec, base=None):
    """Random SO(r) connection on T^dim."""
    seed = spec.integer('seed', 0)
    rank = spec.integer('rank', 3)
    dim = spec.integer('dim', 3)
    rng = np.random.RandomState(seed)
    base = manifolds.torus(dim)
    xs = coordinates(dim)
    comps = random_connection(rng, xs, rank, connections.SPECIAL_ORTHOGONAL,
                              spec.integer('modes', 1), 2,
                              spec.number('amp', 0.5))
    conn = symbolic.form(base, 1, xs, comps, rank, 'theta_so%d' % seed)
    return connections.BundleWithConnection(rank,
                                            connections.SPECIAL_ORTHOGONAL,
                                            base,
                                            [connections.Gauge('global', conn)],
                                            name='SO%d[%d]' % (rank, seed))


def winding_map(m):
    """z -> z^m on the circle."""
    u = coordinates(1, 'u')
    return symbolic.matrix_map(manifolds.circle(), u,
                               [[sympy.exp(sympy.I * m * u[0])]], 'z^%d' % m)


def phase_map(alpha):
    """Constant e^{i alpha} on a point."""
    return symbolic.matrix_map(manifolds.point(), [],
                               [[sympy.exp(sympy.I * number(alpha))]],
                               'e^i%s' % alpha)


def suspension(spec, base=None):
    """Suspension of z^m on S^1, or of e^{i alpha} on a point."""
    if spec.get('alpha') is not None:
        g = phase_map(spec.number('alpha'))
    else:
        g = winding_map(spec.integer('m', 1))
    return diffchar.suspend(g)


register_bundle('trivial', trivial, ('rank', 'so', 'base', 'dim'),
                'product bundle with the flat connection d')
register_bundle('monopole', monopole, ('n',),
                'charge n line bundle on S^2')
register_bundle('instanton', instanton, ('scale',),
                'BPST SU(2) instanton on S^4')
register_bundle('ts2', ts2, (), 'tangent bundle of S^2, Levi-Civita')
register_bundle('torus-flat', torus_flat, ('a', 'b'),
                'flat U(1) bundle i(a dx + b dy) on T^2')
register_bundle('torus-random', torus_random,
                ('seed', 'rank', 'dim', 'modes', 'amp'),
                'random U(r) connection on T^dim')
register_bundle('so3-torus', so3_torus, ('seed', 'rank', 'dim', 'modes', 'amp'),
                'random SO(r) connection on T^dim')
register_bundle('suspension', suspension, ('m', 'alpha'),
                'suspension of z^m or of a constant phase')

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
