"""
Registry of the built-in cycles and chains.

A cycle factory gets the parsed spec and the bundle it is going to be paired
with, so it can attach a trivialization in one of the bundle's gauges. The
'base' of a cycle def tells which manifold the cycle lives in; a trivial
bundle with no base of its own adopts it.
"""
import numpy as np
import sympy

from geometry import connections, mesh, symbolic
from helpers import error, tf_cfg
from . import manifolds

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'

cycle_defs = {}


class CycleDef(object):

    def __init__(self, name, factory, params, base, description):
        self.name = name
        self.factory = factory
        self.params = params
        self.base = base
        self.description = description


def register_cycle(name, factory, params=(), base=None, description=''):
    """ Register cycle type

    'base' is None for cycles that live in any base (points, fibers), or a
    function of the spec and the bundle (None while the bundle is being
    chosen) returning the chart domain of the manifold.
    """
    tf_cfg.dbg(3, "Registering cycle %s" % name)
    cycle_defs[name] = CycleDef(name, factory, tuple(params), base, description)


def cycle_names():
    return sorted(cycle_defs)


def _lookup(spec):
    try:
        return cycle_defs[spec.name]
    except KeyError:
        raise error.SpecError('unknown cycle %r, known: %s'
                              % (spec.name, ', '.join(cycle_names())),
                              spec.text, 0)


def cycle_base(spec):
    """Manifold the cycle lives in, None if it adapts to the bundle."""
    cdef = _lookup(spec)
    spec.check_keys(cdef.params)
    return cdef.base(spec, None) if cdef.base is not None else None


def build_cycle(spec, bundle):
    cdef = _lookup(spec)
    spec.check_keys(cdef.params)
    if cdef.base is not None:
        base = cdef.base(spec, bundle)
        if base != bundle.base:
            raise error.DomainError('cycle %s lives in %r, bundle %s in %r'
                                    % (spec.text, base, bundle.name,
                                       bundle.base))
    tf_cfg.dbg(2, "\tBuilding cycle %s %s" % (spec.name, spec.params))
    return cdef.factory(spec, bundle)


def constant_map(dim_source, value, name=''):
    value = np.asarray(value, dtype=float)
    dim = value.shape[0]
    return mesh.SmoothMap(dim_source, dim, lambda points: value,
                          lambda points: np.zeros((points.shape[0], dim,
                                                   dim_source)),
                          name or 'pt')


def box_center(domain):
    return [0.5 * (a + b) for a, b in domain.bounds]


def has_gauges(bundle, *names):
    return all(g in [x.name for x in bundle.gauges] for g in names)


def polar_gauge(bundle):
    """North gauge when the bundle has both polar gauges.

    Latitudes and caps are measured from the north pole, which only the north
    gauge covers.
    """
    if not has_gauges(bundle, 'north', 'south'):
        return None
    return 'north'


def winding_matrix(bundle, w, angle):
    """Frame change of winding w: phase for unitary, rotation for SO."""
    if bundle.structure == connections.UNITARY:
        return sympy.exp(sympy.I * w * angle) * sympy.eye(bundle.rank)
    if bundle.rank < 2:
        raise error.ArgumentError('no winding frames of SO(%d)' % bundle.rank)
    m = sympy.eye(bundle.rank)
    m[0, 0] = m[1, 1] = sympy.cos(w * angle)
    m[0, 1] = -sympy.sin(w * angle)
    m[1, 0] = sympy.sin(w * angle)
    return m


def trivialization(bundle, symbols, angle, w, gauge):
    """Frame of winding w in 'angle' over a source with 'symbols'."""
    if not w:
        return mesh.Trivialization(gauge=gauge)
    return symbolic.frame(symbols, winding_matrix(bundle, w, angle), gauge)


def point(spec, bundle):
    """Point of the base, 'u' fixes the first coordinate."""
    base = bundle.base
    at = box_center(base)
    if base.dimension and spec.get('u') is not None:
        at[0] = spec.number('u')
    return mesh.GeometricCycle(manifolds.point(), constant_map(0, at),
                               trivialization=mesh.Trivialization(),
                               name='pt%s' % (tuple(at),))


def latitude_map(theta0):
    return mesh.SmoothMap(
        1, 2,
        lambda points: np.concatenate([np.full((points.shape[0], 1), theta0),
                                       points], axis=1),
        lambda points: np.broadcast_to(np.array([[0.0], [1.0]]),
                                       (points.shape[0], 2, 1)),
        'lat%g' % theta0)


def _check_latitude(theta0):
    if not 0.0 < theta0 < manifolds.PI:
        raise error.ArgumentError('latitude %g outside (0, pi)' % theta0)


def latitude(spec, bundle):
    """phi -> (theta0, phi), frames of winding w in phi."""
    theta0 = float(spec.number('theta0', manifolds.PI / 2))
    _check_latitude(theta0)
    w = spec.integer('w', 0)
    u = sympy.Symbol('u', real=True)
    triv = trivialization(bundle, [u], u, w, polar_gauge(bundle))
    return mesh.GeometricCycle(manifolds.circle(), latitude_map(theta0),
                               trivialization=triv,
                               name='lat(%g,w=%d)' % (theta0, w))


def cap_chain(theta0, bundle, w=0):
    """{theta <= theta0} of S^2, a disc with the pole collapsed."""
    _check_latitude(theta0)
    n = tf_cfg.cfg.resolution('sphere')
    domain = mesh.ChartDomain([(0.0, theta0), (0.0, manifolds.TWO_PI)],
                              [False, True], [n, n], [(0, mesh.LOWER)])
    t, p = sympy.symbols('theta phi', real=True)
    triv = trivialization(bundle, [t, p], p, w, polar_gauge(bundle))
    return mesh.BoundedChain(domain, mesh.identity_map(2), 1, triv,
                             'cap(%g)' % theta0)


def cap(spec, bundle):
    return cap_chain(float(spec.number('theta0', manifolds.PI / 2)), bundle,
                     spec.integer('w', 0))


def cap_boundary(spec, bundle):
    return mesh.boundary(cap(spec, bundle))


def sphere(spec, bundle):
    return mesh.fundamental_cycle(bundle.base, 'S2')


def s4(spec, bundle):
    return mesh.fundamental_cycle(bundle.base, 'S4')


def torus(spec, bundle):
    return mesh.fundamental_cycle(bundle.base, 'T%d' % bundle.base.dimension,
                                  mesh.Trivialization())


def torus_loop(spec, bundle):
    """t -> (x0 + p t, y0 + q t, 0, ...) on T^dim."""
    dim = bundle.base.dimension
    p = spec.integer('p', 1)
    q = spec.integer('q', 0)
    if p == 0 and q == 0:
        raise error.ArgumentError('torus loop of slope (0, 0)')
    start = np.zeros(dim)
    start[0] = spec.number('x0', 0.0)
    if dim > 1:
        start[1] = spec.number('y0', 0.0)
    elif q:
        raise error.ArgumentError('slope q on a circle')
    slope = np.zeros(dim)
    slope[0] = p
    if dim > 1:
        slope[1] = q
    smap = mesh.SmoothMap(1, dim, lambda points: start + points * slope,
                          lambda points: np.broadcast_to(
                              slope[:, None], (points.shape[0], dim, 1)),
                          'loop(%d,%d)' % (p, q))
    w = spec.integer('w', 0)
    u = sympy.Symbol('u', real=True)
    return mesh.GeometricCycle(manifolds.circle(), smap,
                               trivialization=trivialization(bundle, [u], u, w,
                                                             None),
                               name='loop(%d,%d)' % (p, q))


def square(spec, bundle):
    """[x0, x0 + a] x [y0, y0 + a] in the first two torus coordinates."""
    dim = bundle.base.dimension
    if dim < 2:
        raise error.ArgumentError('square in a %d-dimensional base' % dim)
    size = spec.number('a', 1.0)
    x0 = spec.number('x0', 0.5)
    y0 = spec.number('y0', 0.5)
    if not 0.0 < size < manifolds.TWO_PI:
        raise error.ArgumentError('square side %g outside (0, 2pi)' % size)
    n = tf_cfg.cfg.resolution('torus')
    domain = mesh.ChartDomain([(x0, x0 + size), (y0, y0 + size)], None, n)
    rest = np.zeros(dim - 2)

    def evaluator(points):
        return np.concatenate([points, np.broadcast_to(
            rest, (points.shape[0], dim - 2))], axis=1)
    jac = np.eye(dim)[:, :2]
    smap = mesh.SmoothMap(2, dim, evaluator,
                          lambda points: np.broadcast_to(
                              jac, (points.shape[0], dim, 2)),
                          'square')
    return mesh.BoundedChain(domain, smap, 1, mesh.Trivialization(),
                             'sq(%g)' % size)


def square_boundary(spec, bundle):
    return mesh.boundary(square(spec, bundle))


def fiber(spec, bundle):
    """s -> (s, x): the circle factor of S^1 x X over a point of X."""
    base = bundle.base
    if not base.periodic or not base.periodic[0]:
        raise error.DomainError('%r has no circle factor' % base)
    at = box_center(base)[1:]
    if at and spec.get('u') is not None:
        at[0] = spec.number('u')
    at = np.asarray(at, dtype=float)
    dim = base.dimension
    jac = np.zeros((dim, 1))
    jac[0, 0] = 1.0

    def evaluator(points):
        return np.concatenate([points, np.broadcast_to(
            at, (points.shape[0], dim - 1))], axis=1)
    smap = mesh.SmoothMap(1, dim, evaluator,
                          lambda points: np.broadcast_to(
                              jac, (points.shape[0], dim, 1)),
                          'fiber')
    # suspensions bring their own frames over the fiber
    triv = None if bundle.clutching is not None else mesh.Trivialization()
    return mesh.GeometricCycle(
        mesh.ChartDomain([(0.0, manifolds.TWO_PI)], [True],
                         [base.resolution[0]]),
        smap, trivialization=triv, name='fiber%s' % (tuple(at),))


def _torus_base(spec, bundle=None):
    default = bundle.base.dimension if bundle is not None else 2
    return manifolds.torus(spec.integer('dim', default))


register_cycle('point', point, ('u',), None, 'a point of the base')
register_cycle('latitude', latitude, ('theta0', 'w'),
               lambda spec, bundle: manifolds.sphere(), 'latitude circle of S^2')
register_cycle('cap-boundary', cap_boundary, ('theta0', 'w'),
               lambda spec, bundle: manifolds.sphere(),
               'boundary of the polar cap theta <= theta0')
register_cycle('cap', cap, ('theta0', 'w'), lambda spec, bundle: manifolds.sphere(),
               'polar cap theta <= theta0 (chain)')
register_cycle('sphere', sphere, (), lambda spec, bundle: manifolds.sphere(),
               'fundamental cycle of S^2')
register_cycle('s4', s4, (), lambda spec, bundle: manifolds.s4(),
               'fundamental cycle of S^4')
register_cycle('torus', torus, ('dim',), _torus_base,
               'fundamental cycle of T^dim')
register_cycle('torus-loop', torus_loop, ('p', 'q', 'x0', 'y0', 'dim', 'w'),
               _torus_base, 'closed geodesic of slope (p, q) on T^dim')
register_cycle('square', square, ('a', 'x0', 'y0', 'dim'), _torus_base,
               'coordinate square in T^dim (chain)')
register_cycle('square-boundary', square_boundary, ('a', 'x0', 'y0', 'dim'),
               _torus_base, 'boundary of the coordinate square')
register_cycle('fiber', fiber, ('u',), None,
               'circle factor of a suspension over a point')

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
