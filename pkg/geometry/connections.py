"""
Vector bundles with connections presented in gauge charts.

A bundle lives on one ChartDomain; every gauge is a connection 1-form valid on
a region of it. Transition functions relate gauges on overlaps:

    theta_B = g theta_A g^-1 - dg g^-1

Unitary bundles carry anti-Hermitian connection forms, special orthogonal ones
real skew-symmetric forms.
"""
import numpy as np

from helpers import error, tf_cfg
from . import forms, mesh

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'

UNITARY = 'unitary'
SPECIAL_ORTHOGONAL = 'special-orthogonal'
STRUCTURES = (UNITARY, SPECIAL_ORTHOGONAL)

STRUCTURE_TOLERANCE = 1e-10
SINGULAR_TOLERANCE = 1e-12
# Grid size per axis used by sample based checks.
CHECK_SAMPLES = 6


def _as_form(values):
    """(n, r, r, dim) partials -> (n, dim, r, r) 1-form coefficients."""
    return np.moveaxis(values, -1, 1)


def inverse(values, points=None, what='matrix'):
    """Batched inverse, GaugeError with the location of a singular sample."""
    det = np.abs(np.linalg.det(values))
    bad = np.nonzero(det < SINGULAR_TOLERANCE)[0]
    if bad.size:
        where = '' if points is None else ' at %s' % (points[bad[0]].tolist(),)
        raise error.GaugeError('singular %s%s' % (what, where))
    return np.linalg.inv(values)


def coarse_points(domain, samples=CHECK_SAMPLES):
    coarse = domain.with_resolution([min(max(n, 4), samples)
                                     for n in domain.resolution])
    points, _ = mesh.quadrature_rule(coarse)
    return points


class MatrixMap(object):
    """Smooth map from a chart domain to invertible r x r matrices.

    'symbolic' optionally keeps (symbols, sympy Matrix) the map was built from,
    constructions that differentiate it once more use it.
    """

    def __init__(self, domain, rank, evaluator, jacobian=None, name='',
                 symbolic=None):
        self.domain = domain
        self.rank = rank
        self.evaluator = evaluator
        self.analytic_jacobian = jacobian
        self.name = name or 'g'
        self.symbolic = symbolic

    def __call__(self, points):
        points = np.asarray(points, dtype=float)
        values = np.asarray(self.evaluator(points), dtype=complex)
        return np.broadcast_to(values, (points.shape[0], self.rank, self.rank))

    def jacobian(self, points):
        """(n, r, r, dim) partial derivatives."""
        points = np.asarray(points, dtype=float)
        shape = (points.shape[0], self.rank, self.rank, self.domain.dimension)
        if self.analytic_jacobian is not None:
            return np.broadcast_to(np.asarray(self.analytic_jacobian(points),
                                              dtype=complex), shape)
        return mesh.central_difference(self, points, self.domain.steps())

    def compose(self, smap, domain):
        """self o smap for a map from 'domain' into this map's domain."""
        outer = self
        jac = None
        if (self.analytic_jacobian is not None
                and smap.analytic_jacobian is not None):
            def jac(points):
                inner = smap.jacobian(points, None)
                return np.einsum('nabk,nkl->nabl',
                                 outer.jacobian(smap(points)), inner)
        return MatrixMap(domain, self.rank, lambda points: outer(smap(points)),
                         jac, '%s.%s' % (self.name, smap.name))


def constant_map(domain, matrix, name=''):
    matrix = np.asarray(matrix, dtype=complex)
    rank = matrix.shape[0]
    dim = domain.dimension

    def jacobian(points):
        return np.zeros((points.shape[0], rank, rank, dim), dtype=complex)
    return MatrixMap(domain, rank, lambda points: matrix, jacobian,
                     name or 'const')


class Gauge(object):
    """Connection form valid where 'region' (points -> bool mask) holds."""

    def __init__(self, name, connection, region=None):
        if connection.degree != 1:
            raise error.DegreeError('gauge %s: connection of degree %d'
                                    % (name, connection.degree))
        self.name = name
        self.connection = connection
        self.region = region

    def covers(self, points):
        if self.region is None:
            return np.ones(points.shape[0], dtype=bool)
        return np.asarray(self.region(points), dtype=bool)


class Transition(object):
    """Change of gauge 'source' -> 'target' on an overlap.

    The overlap is sampled on its own domain and mapped to base coordinates
    by 'embed'; 'shift' moves source coordinates to the target chart
    coordinates of the same point (seams of glued boxes).
    """

    def __init__(self, source, target, function, overlap, embed=None,
                 shift=None):
        self.source = source
        self.target = target
        self.function = function
        self.overlap = overlap
        self.embed = embed
        self.shift = shift

    def points(self):
        points = coarse_points(self.overlap)
        if self.embed is not None:
            points = self.embed(points)
        return points

    def target_points(self, points):
        if self.shift is None:
            return points
        return self.shift(points)


class BundleWithConnection(object):
    """Rank r bundle with a connection given gauge-wise on a chart domain."""

    def __init__(self, rank, structure, base, gauges, transitions=(), name='',
                 clutching=None):
        if structure not in STRUCTURES:
            raise error.ArgumentError('unknown structure %r' % (structure,))
        if not gauges:
            raise error.ArgumentError('bundle needs at least one gauge')
        names = [g.name for g in gauges]
        if len(set(names)) != len(names):
            raise error.ArgumentError('duplicate gauge names %s' % names)
        for g in gauges:
            if g.connection.rank != rank or g.connection.domain != base:
                raise error.DomainError('gauge %s does not live on %r with rank '
                                        '%d' % (g.name, base, rank))
        for t in transitions:
            if t.source not in names or t.target not in names:
                raise error.ArgumentError('transition %s -> %s between unknown '
                                          'gauges' % (t.source, t.target))
        self.rank = rank
        self.structure = structure
        self.base = base
        self.gauges = list(gauges)
        self.transitions = list(transitions)
        self.name = name or 'E'
        # Defining map of a suspended bundle.
        self.clutching = clutching

    @property
    def dimension(self):
        return self.base.dimension

    def gauge(self, name=None):
        if name is None or isinstance(name, int):
            return self.gauges[name or 0]
        for g in self.gauges:
            if g.name == name:
                return g
        raise error.GaugeError('bundle %s has no gauge %r' % (self.name, name))

    def connection(self, gauge=None):
        return self.gauge(gauge).connection

    def __repr__(self):
        return 'BundleWithConnection(%s, rank=%d, %s, gauges=%s)' % (
            self.name, self.rank, self.structure,
            [g.name for g in self.gauges])


def curvature_values(theta, dtheta, dim):
    """Omega = d theta + theta ^ theta from sampled values."""
    return dtheta + forms.wedge_values(theta, 1, theta, 1, dim)


def curvature(b, gauge=None):
    """Curvature 2-form of the connection in one gauge."""
    conn = b.connection(gauge)
    dim = b.dimension

    def evaluator(points):
        theta = conn(points)
        dtheta = forms.derivative_values(conn.jacobian(points), 1, dim)
        return curvature_values(theta, dtheta, dim)
    return forms.FormField(2, b.base, evaluator, b.rank,
                           name='Omega(%s)' % b.name)


def flat_bundle(base, rank=1, structure=UNITARY, name=''):
    """Trivial bundle with the product connection d."""
    conn = forms.zero_form(1, base, rank)
    return BundleWithConnection(rank, structure, base,
                                [Gauge('global', conn)], name=name or 'flat')


def _block(a, b):
    n = a.shape[0]
    ra, rb = a.shape[-1], b.shape[-1]
    shape = a.shape[:-2] + (ra + rb, ra + rb)
    out = np.zeros(shape, dtype=complex)
    out[..., :ra, :ra] = a
    out[..., ra:, ra:] = b
    return out


def _block_jacobian(a, b):
    a = np.moveaxis(a, -1, 1)
    b = np.moveaxis(b, -1, 1)
    return np.moveaxis(_block(a, b), 1, -1)


def _block_form(a, b):
    def evaluator(points):
        return _block(a(points), b(points))

    jac = None
    if a.analytic_jacobian is not None and b.analytic_jacobian is not None:
        def jac(points):
            return _block_jacobian(a.jacobian(points), b.jacobian(points))
    return forms.FormField(a.degree, a.domain, evaluator, a.rank + b.rank, jac,
                           '(%s+%s)' % (a.name, b.name))


def _block_map(f, g):
    def evaluator(points):
        return _block(f(points), g(points))
    return evaluator


def direct_sum(a, b):
    """Block diagonal bundle; gauges are paired by name, else primaries."""
    if a.base != b.base:
        raise error.DomainError('direct sum over different bases %r and %r'
                                % (a.base, b.base))
    structure = (SPECIAL_ORTHOGONAL if a.structure == b.structure
                 == SPECIAL_ORTHOGONAL else UNITARY)
    names_b = [g.name for g in b.gauges]
    pairs = [(g, b.gauge(g.name)) for g in a.gauges if g.name in names_b]
    if not pairs:
        pairs = [(a.gauge(), b.gauge())]
    gauges = []
    for ga, gb in pairs:
        region = None
        if ga.region is not None or gb.region is not None:
            def region(points, ga=ga, gb=gb):
                return ga.covers(points) & gb.covers(points)
        gauges.append(Gauge(ga.name, _block_form(ga.connection, gb.connection),
                            region))
    kept = [g.name for g in gauges]
    transitions = []
    for ta in a.transitions:
        for tb in b.transitions:
            if (ta.source, ta.target) != (tb.source, tb.target):
                continue
            if ta.source not in kept or ta.target not in kept:
                continue
            transitions.append(Transition(ta.source, ta.target,
                                          _block_map(ta.function, tb.function),
                                          ta.overlap, ta.embed, ta.shift))
    tf_cfg.dbg(3, "\tDirect sum %s+%s: %d gauges, %d transitions"
               % (a.name, b.name, len(gauges), len(transitions)))
    return BundleWithConnection(a.rank + b.rank, structure, a.base, gauges,
                                transitions, '%s+%s' % (a.name, b.name))


def pullback_bundle(b, smap, domain, name=''):
    """f*E with f*theta gauge-wise; transitions are composed with f."""
    if smap.dim_target != b.dimension or smap.dim_source != domain.dimension:
        raise error.DomainError('map %s: %d -> %d does not fit %r -> %r'
                                % (smap.name, smap.dim_source, smap.dim_target,
                                   domain, b.base))
    gauges = []
    for g in b.gauges:
        region = None
        if g.region is not None:
            def region(points, g=g):
                return g.covers(smap(points))
        gauges.append(Gauge(g.name, forms.pullback(g.connection, smap, domain),
                            region))
    transitions = []
    for t in b.transitions:
        if t.shift is not None:
            tf_cfg.dbg(3, "\tPullback of %s drops seam %s -> %s"
                       % (b.name, t.source, t.target))
            continue
        transitions.append(Transition(t.source, t.target,
                                      lambda points, t=t: t.function(smap(points)),
                                      domain))
    return BundleWithConnection(b.rank, b.structure, domain, gauges, transitions,
                                name or '%s*%s' % (smap.name, b.name))


def _as_matrix_map(g, domain, rank):
    if isinstance(g, MatrixMap):
        return g
    return MatrixMap(domain, rank, g)


def _transformed_form(conn, g):
    def evaluator(points):
        G = g(points)
        Gi = inverse(G, points, 'gauge transformation')
        dG = _as_form(g.jacobian(points))
        theta = conn(points)
        return (np.matmul(np.matmul(G[:, None], theta), Gi[:, None])
                - np.matmul(dG, Gi[:, None]))
    return forms.FormField(1, conn.domain, evaluator, conn.rank,
                           name='%s.%s' % (g.name, conn.name))


def gauge_transform(b, g, gauge=None):
    """theta -> g theta g^-1 - dg g^-1 in one gauge (the primary by default).

    Transitions touching the gauge are composed with g so the cocycle stays
    consistent.
    """
    g = _as_matrix_map(g, b.base, b.rank)
    if g.rank != b.rank:
        raise error.ArgumentError('gauge transformation of rank %d on a rank %d '
                                  'bundle' % (g.rank, b.rank))
    target = b.gauge(gauge)
    points = coarse_points(b.base)
    inverse(g(points), points, 'gauge transformation')
    gauges = []
    for gg in b.gauges:
        if gg is target:
            gg = Gauge(gg.name, _transformed_form(gg.connection, g), gg.region)
        gauges.append(gg)
    transitions = []
    for t in b.transitions:
        fn = t.function
        if t.source == target.name:
            def fn(points, fn=fn):
                return np.matmul(fn(points), np.linalg.inv(g(points)))
        if t.target == target.name:
            def fn(points, fn=fn, t=t):
                return np.matmul(g(t.target_points(points)), fn(points))
        transitions.append(Transition(t.source, t.target, fn, t.overlap,
                                      t.embed, t.shift))
    return BundleWithConnection(b.rank, b.structure, b.base, gauges,
                                transitions, '%s.%s' % (g.name, b.name),
                                b.clutching)


def structure_residual(b, structure, values):
    if structure == UNITARY:
        return float(np.max(np.abs(values + np.conj(np.swapaxes(values, -1, -2))),
                            initial=0.0))
    skew = np.max(np.abs(values + np.swapaxes(values, -1, -2)), initial=0.0)
    return float(max(skew, np.max(np.abs(values.imag), initial=0.0)))


def check_structure(b, points=None):
    """Largest deviation of sampled connection values from the structure."""
    if points is None:
        points = coarse_points(b.base)
    worst = 0.0
    for g in b.gauges:
        pts = points[g.covers(points)]
        if not pts.shape[0]:
            continue
        worst = max(worst, structure_residual(b, b.structure, g.connection(pts)))
    tf_cfg.dbg(3, "\tStructure residual of %s: %g" % (b.name, worst))
    return worst


def validate(b):
    residual = check_structure(b)
    if residual > STRUCTURE_TOLERANCE:
        raise error.GaugeError('%s connection of %s violates its structure by %g'
                               % (b.structure, b.name, residual))
    return b


def check_overlaps(b):
    """Largest transition law residual on overlaps, connection and curvature.

    Returns the maximum of |theta_B - (g theta_A g^-1 - dg g^-1)| and
    |Omega_B - g Omega_A g^-1| over sampled overlap points.
    """
    worst = 0.0
    steps = b.base.steps()
    for t in b.transitions:
        source, target = b.gauge(t.source), b.gauge(t.target)
        x = t.points()
        y = t.target_points(x)
        mask = source.covers(x) & target.covers(y)
        x, y = x[mask], y[mask]
        if not x.shape[0]:
            tf_cfg.dbg(2, "\tEmpty overlap %s -> %s" % (t.source, t.target))
            continue
        def function(points, t=t):
            values = np.asarray(t.function(points), dtype=complex)
            return np.broadcast_to(values, (points.shape[0], b.rank, b.rank))
        G = function(x)
        Gi = inverse(G, x, 'transition')
        dG = _as_form(mesh.central_difference(function, x, steps))
        theta_a = source.connection(x)
        theta_b = target.connection(y)
        expected = (np.matmul(np.matmul(G[:, None], theta_a), Gi[:, None])
                    - np.matmul(dG, Gi[:, None]))
        worst = max(worst, float(np.max(np.abs(theta_b - expected))))
        omega_a = curvature(b, t.source)(x)
        omega_b = curvature(b, t.target)(y)
        conj = np.matmul(np.matmul(G[:, None], omega_a), Gi[:, None])
        worst = max(worst, float(np.max(np.abs(omega_b - conj))))
    tf_cfg.dbg(3, "\tOverlap residual of %s: %g" % (b.name, worst))
    return worst


def covering_gauge(b, cycle, preferred=None):
    """Gauge whose region contains the whole cycle image."""
    points = coarse_points(cycle.domain, 16) if cycle.dimension else \
        np.zeros((1, 0))
    image = cycle.target_map(points)
    candidates = [b.gauge(preferred)] if preferred is not None else b.gauges
    for g in candidates:
        if g.covers(image).all():
            return g
    raise error.GaugeError('%s leaves the gauge region%s of %s and no '
                           'transition along it is known'
                           % (cycle.name, '' if preferred is None
                              else ' %r' % preferred, b.name))


def frame_connection(b, cycle):
    """Connection of the pulled back bundle in the cycle's trivialization.

        theta_tau = tau^-1 (g* theta) tau + tau^-1 d tau
    """
    triv = cycle.trivialization
    if triv is None:
        raise error.TrivializationError('cycle not trivialized: %s' % cycle.name)
    gauge = covering_gauge(b, cycle, triv.gauge)
    theta = forms.pullback(gauge.connection, cycle)
    if triv.frame is None:
        return theta
    steps = cycle.domain.steps()
    frame = triv.frame

    def evaluator(points):
        T = np.broadcast_to(np.asarray(frame(points), dtype=complex),
                            (points.shape[0], b.rank, b.rank))
        Ti = inverse(T, points, 'frame')
        if triv.frame_jacobian is not None:
            dT = np.asarray(triv.frame_jacobian(points), dtype=complex)
            dT = np.broadcast_to(dT, T.shape + (points.shape[1],))
        else:
            dT = mesh.central_difference(frame, points, steps)
        return (np.matmul(np.matmul(Ti[:, None], theta(points)), T[:, None])
                + np.matmul(Ti[:, None], _as_form(dT)))
    return forms.FormField(1, cycle.domain, evaluator, b.rank,
                           name='%s|%s' % (b.name, cycle.name))


def restrict_to_cycle(b, cycle):
    """Single gauge bundle on the cycle's source domain, in its frame."""
    return BundleWithConnection(b.rank, b.structure, cycle.domain,
                                [Gauge('frame', frame_connection(b, cycle))],
                                name='%s|%s' % (b.name, cycle.name))


def parallel_transport(b, loop, steps=None):
    """Holonomy of a loop: U(1) for dU/dt = U theta(dgamma/dt), U(0) = I.

    Classical RK4 with at least [Resolution] transport_steps steps. A
    trivialized loop is transported in its frame, a bare one in the gauge that
    covers it. Loops are never split at transitions: the whole image must lie
    in one gauge region, GaugeError otherwise.
    """
    if loop.dimension != 1:
        raise error.DegreeError('transport along a %d-dimensional cycle'
                                % loop.dimension)
    minimum = tf_cfg.cfg.resolution('transport_steps')
    steps = max(steps or minimum, minimum)
    if loop.trivialization is not None:
        form = frame_connection(b, loop)
    else:
        form = forms.pullback(covering_gauge(b, loop).connection, loop)
    t0, t1 = loop.domain.bounds[0]
    h = (t1 - t0) / steps
    nodes = t0 + 0.5 * h * np.arange(2 * steps + 1)
    a = form(nodes[:, None])[:, 0]
    tf_cfg.dbg(3, "\tTransport of %s along %s: %d RK4 steps"
               % (b.name, loop.name, steps))
    U = np.eye(b.rank, dtype=complex)
    for i in range(steps):
        a0, am, a1 = a[2 * i], a[2 * i + 1], a[2 * i + 2]
        k1 = U @ a0
        k2 = (U + 0.5 * h * k1) @ am
        k3 = (U + 0.5 * h * k2) @ am
        k4 = (U + h * k3) @ a1
        U = U + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    if loop.orientation < 0:
        U = np.linalg.inv(U)
    return U

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
