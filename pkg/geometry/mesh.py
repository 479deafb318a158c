"""
Parametrized manifolds, cycles and chains with deterministic quadrature.

A chart domain is a box with per-axis periodicity and resolution. Closed
manifolds with coordinate singularities (sphere poles) live on one box whose
collapsing facets are declared, such facets are thin: every form of matching
degree integrates to zero over them.
"""
import itertools
import math

import numpy as np
from scipy import special

from helpers import error, tf_cfg

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'

LOWER = 0
UPPER = 1

# Offsets of the central difference stencils, in units of the axis step.
FD_OFFSETS = np.array([-2.0, -1.0, -0.5, 0.5, 1.0, 2.0])

THIN_TOLERANCE = 1e-12


class ChartDomain(object):
    """Box of real coordinates, possibly periodic along some axes."""

    def __init__(self, bounds, periodic=None, resolution=16, collapsed=()):
        self.bounds = tuple((float(a), float(b)) for a, b in bounds)
        dim = len(self.bounds)
        if periodic is None:
            periodic = [False] * dim
        if isinstance(resolution, int):
            resolution = [resolution] * dim
        self.periodic = tuple(bool(p) for p in periodic)
        self.resolution = tuple(int(n) for n in resolution)
        self.collapsed = tuple(sorted(set((int(a), int(e)) for a, e in collapsed)))
        if len(self.periodic) != dim or len(self.resolution) != dim:
            raise error.ArgumentError('domain axes mismatch: %d bounds, %d flags, '
                                      '%d resolutions' % (dim, len(self.periodic),
                                                          len(self.resolution)))
        for axis, (a, b) in enumerate(self.bounds):
            if not a < b:
                raise error.ArgumentError('empty interval [%g, %g] on axis %d'
                                          % (a, b, axis))
            if self.resolution[axis] < 4:
                raise error.ArgumentError('resolution %d on axis %d is below 4'
                                          % (self.resolution[axis], axis))
        for axis, end in self.collapsed:
            if axis >= dim or self.periodic[axis]:
                raise error.ArgumentError('collapsed facet on axis %d is not a '
                                          'boundary facet' % axis)

    @property
    def dimension(self):
        return len(self.bounds)

    def key(self):
        return (self.bounds, self.periodic, self.resolution, self.collapsed)

    def __eq__(self, other):
        if not isinstance(other, ChartDomain):
            return NotImplemented
        return self.key() == other.key()

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        axes = ['%s[%g,%g]/%d' % ('~' if p else '', a, b, n)
                for (a, b), p, n in zip(self.bounds, self.periodic,
                                        self.resolution)]
        return 'ChartDomain(%s)' % ' x '.join(axes)

    def volume(self):
        return float(np.prod([b - a for a, b in self.bounds]))

    def is_closed(self):
        """Every axis is periodic or both of its ends collapse."""
        for axis in range(self.dimension):
            if self.periodic[axis]:
                continue
            if ((axis, LOWER) not in self.collapsed
                    or (axis, UPPER) not in self.collapsed):
                return False
        return True

    def steps(self):
        """Finite difference steps h_i = (b_i - a_i) / (8 N_i)."""
        return np.array([(b - a) / (8.0 * n)
                         for (a, b), n in zip(self.bounds, self.resolution)])

    def with_resolution(self, resolution):
        return ChartDomain(self.bounds, self.periodic, resolution,
                           self.collapsed)

    def facet(self, axis):
        """Domain of the facet orthogonal to 'axis'."""
        keep = [i for i in range(self.dimension) if i != axis]
        collapsed = [(keep.index(a), e) for a, e in self.collapsed if a != axis]
        return ChartDomain([self.bounds[i] for i in keep],
                           [self.periodic[i] for i in keep],
                           [self.resolution[i] for i in keep], collapsed)

    def product(self, other):
        """This domain's axes followed by the other's."""
        shift = self.dimension
        collapsed = list(self.collapsed) + [(a + shift, e)
                                            for a, e in other.collapsed]
        return ChartDomain(self.bounds + other.bounds,
                           self.periodic + other.periodic,
                           self.resolution + other.resolution, collapsed)

    def sample(self, count, rng, margin=0.05):
        """Random interior points away from the box walls."""
        lo = np.array([a + margin * (b - a) for a, b in self.bounds])
        hi = np.array([b - margin * (b - a) for a, b in self.bounds])
        return lo + (hi - lo) * rng.random_sample((count, self.dimension))


def axis_rule(domain, axis):
    """Nodes and weights of one axis: periodic trapezoid or Gauss-Legendre."""
    a, b = domain.bounds[axis]
    n = domain.resolution[axis]
    if domain.periodic[axis]:
        h = (b - a) / n
        return a + h * np.arange(n), np.full(n, h)
    x, w = special.roots_legendre(n)
    return a + (x + 1.0) * (b - a) / 2.0, w * (b - a) / 2.0


def quadrature_rule(domain):
    """Tensor product rule, axis 0 outermost.

    Returns (points, weights) with points of shape (n, dim), weights of shape
    (n,). A zero dimensional domain is a single point of weight 1.
    """
    if domain.dimension == 0:
        return np.zeros((1, 0)), np.ones(1)
    rules = [axis_rule(domain, axis) for axis in range(domain.dimension)]
    nodes = np.meshgrid(*[r[0] for r in rules], indexing='ij')
    weights = np.meshgrid(*[r[1] for r in rules], indexing='ij')
    points = np.stack([g.reshape(-1) for g in nodes], axis=1)
    w = np.ones(points.shape[0])
    for g in weights:
        w = w * g.reshape(-1)
    tf_cfg.dbg(5, "\tQuadrature on %r: %d points" % (domain, points.shape[0]))
    return points, w


def central_difference(fn, points, steps):
    """Partial derivatives of a vectorized function along every axis.

    Fourth order central differences with steps h and h/2 combined by one
    Richardson extrapolation. 'fn' maps (n, dim) points to arrays whose first
    axis is n; the result gets a trailing axis of size dim.
    """
    points = np.asarray(points, dtype=float)
    n, dim = points.shape
    if dim == 0:
        sample = np.asarray(fn(points))
        return np.zeros(sample.shape + (0,), dtype=sample.dtype)
    shifted = np.empty((dim, len(FD_OFFSETS), n, dim))
    for axis in range(dim):
        for k, off in enumerate(FD_OFFSETS):
            shifted[axis, k] = points
            shifted[axis, k, :, axis] += off * steps[axis]
    values = np.asarray(fn(shifted.reshape(-1, dim)))
    values = values.reshape((dim, len(FD_OFFSETS), n) + values.shape[1:])
    derivs = []
    for axis in range(dim):
        h = steps[axis]
        f = values[axis]
        d_h = (f[0] - 8.0 * f[1] + 8.0 * f[4] - f[5]) / (12.0 * h)
        d_half = (f[1] - 8.0 * f[2] + 8.0 * f[3] - f[4]) / (6.0 * h)
        derivs.append((16.0 * d_half - d_h) / 15.0)
    return np.stack(derivs, axis=-1)


class SmoothMap(object):
    """Smooth map between coordinate spaces, vectorized over points."""

    def __init__(self, dim_source, dim_target, evaluator, jacobian=None,
                 name=''):
        self.dim_source = dim_source
        self.dim_target = dim_target
        self.evaluator = evaluator
        self.analytic_jacobian = jacobian
        self.name = name or 'map'

    def __call__(self, points):
        points = np.asarray(points, dtype=float)
        values = np.asarray(self.evaluator(points), dtype=float)
        return np.broadcast_to(values, (points.shape[0], self.dim_target))

    def jacobian(self, points, steps):
        """(n, dim_target, dim_source) Jacobian, FD when not supplied."""
        points = np.asarray(points, dtype=float)
        if self.analytic_jacobian is not None:
            jac = np.asarray(self.analytic_jacobian(points), dtype=float)
            return np.broadcast_to(jac, (points.shape[0], self.dim_target,
                                         self.dim_source))
        tf_cfg.dbg(5, "\tFD Jacobian of %s" % self.name)
        return central_difference(self, points, steps)

    def compose(self, inner):
        """self o inner."""
        if inner.dim_target != self.dim_source:
            raise error.DomainError('cannot compose %s after %s: %d != %d'
                                    % (self.name, inner.name, inner.dim_target,
                                       self.dim_source))
        jac = None
        if (self.analytic_jacobian is not None
                and inner.analytic_jacobian is not None):
            def jac(points):
                inner_pts = inner(points)
                return np.matmul(self.jacobian(inner_pts, None),
                                 inner.jacobian(points, None))
        return SmoothMap(inner.dim_source, self.dim_target,
                         lambda points: self(inner(points)), jac,
                         '%s.%s' % (self.name, inner.name))


def identity_map(dim):
    return SmoothMap(dim, dim, lambda points: points,
                     lambda points: np.broadcast_to(np.eye(dim),
                                                    (points.shape[0], dim, dim)),
                     'id')


def facet_embedding(dim, axis, value):
    """Facet coordinates -> box coordinates with x_axis fixed to 'value'."""
    def evaluator(points):
        return np.insert(points, axis, value, axis=1)

    jac = np.delete(np.eye(dim), axis, axis=1)

    def jacobian(points):
        return np.broadcast_to(jac, (points.shape[0], dim, dim - 1))
    return SmoothMap(dim - 1, dim, evaluator, jacobian,
                     'facet%d=%g' % (axis, value))


class Trivialization(object):
    """Frame of a pulled back bundle over a cycle's source domain.

    'frame' maps source points to invertible r x r matrices, the columns are
    the frame vectors written in gauge 'gauge' (None is the primary gauge).
    Without 'frame' the gauge's own frame is used.
    """

    def __init__(self, frame=None, gauge=None, frame_jacobian=None):
        self.frame = frame
        self.gauge = gauge
        self.frame_jacobian = frame_jacobian

    def pullback(self, smooth_map):
        """Frame restricted along a map of source domains (facets, products)."""
        if self.frame is None:
            return Trivialization(gauge=self.gauge)
        frame = self.frame
        jac = None
        if (self.frame_jacobian is not None
                and smooth_map.analytic_jacobian is not None):
            def jac(points):
                inner = smooth_map.jacobian(points, None)
                return np.einsum('nijk,nkl->nijl',
                                 self.frame_jacobian(smooth_map(points)), inner)
        return Trivialization(lambda points: frame(smooth_map(points)),
                              self.gauge, jac)


class GeometricCycle(object):
    """Smooth map from a parametrized p-manifold into a target manifold.

    A standalone cycle has a closed source domain; facets returned by
    boundary() are pieces of a closed union and may have open domains.
    """

    def __init__(self, domain, target_map, orientation=1, trivialization=None,
                 name='', thin=False):
        if orientation not in (1, -1):
            raise error.ArgumentError('orientation must be +1 or -1')
        if target_map.dim_source != domain.dimension:
            raise error.DomainError('map %s expects %d coordinates, domain has %d'
                                    % (target_map.name, target_map.dim_source,
                                       domain.dimension))
        self.domain = domain
        self.target_map = target_map
        self.orientation = orientation
        self.trivialization = trivialization
        self.name = name or target_map.name
        self.thin = thin

    @property
    def dimension(self):
        return self.domain.dimension

    @property
    def pieces(self):
        return [self]

    def reversed(self):
        return GeometricCycle(self.domain, self.target_map, -self.orientation,
                              self.trivialization, '-' + self.name, self.thin)

    def with_trivialization(self, trivialization):
        return GeometricCycle(self.domain, self.target_map, self.orientation,
                              trivialization, self.name, self.thin)

    def reparametrized(self, smooth_map, domain=None, orientation=1):
        """Cycle precomposed with a diffeomorphism of source domains."""
        triv = None
        if self.trivialization is not None:
            triv = self.trivialization.pullback(smooth_map)
        return GeometricCycle(domain or self.domain,
                              self.target_map.compose(smooth_map),
                              self.orientation * orientation, triv,
                              self.name + "'", self.thin)

    def push(self, smooth_map, name=''):
        """g_*(cycle): the cycle followed by a map of target manifolds."""
        return GeometricCycle(self.domain, smooth_map.compose(self.target_map),
                              self.orientation, self.trivialization,
                              name or '%s.%s' % (smooth_map.name, self.name),
                              self.thin)

    def __repr__(self):
        return 'GeometricCycle(%s, dim=%d, %+d)' % (self.name, self.dimension,
                                                    self.orientation)


class CycleUnion(object):
    """Oriented formal sum of cycle pieces of one dimension."""

    def __init__(self, pieces, name=''):
        pieces = list(pieces)
        dims = set(p.dimension for p in pieces)
        if len(dims) > 1:
            raise error.DegreeError('cycle pieces of dimensions %s' % sorted(dims))
        self.pieces = pieces
        self._dimension = dims.pop() if dims else None
        self.name = name or '+'.join(p.name for p in pieces)

    @property
    def dimension(self):
        return self._dimension

    def reversed(self):
        return CycleUnion([p.reversed() for p in self.pieces], '-' + self.name)

    def __iter__(self):
        return iter(self.pieces)

    def __len__(self):
        return len(self.pieces)

    def __repr__(self):
        return 'CycleUnion(%s)' % ', '.join(repr(p) for p in self.pieces)


class BoundedChain(object):
    """Chain c with a non-empty boundary; houses c in f(dc) = int_c w."""

    def __init__(self, domain, target_map, orientation=1, trivialization=None,
                 name=''):
        if orientation not in (1, -1):
            raise error.ArgumentError('orientation must be +1 or -1')
        if domain.is_closed():
            raise error.ArgumentError('chain domain %r has no boundary' % domain)
        if target_map.dim_source != domain.dimension:
            raise error.DomainError('map %s expects %d coordinates, domain has %d'
                                    % (target_map.name, target_map.dim_source,
                                       domain.dimension))
        self.domain = domain
        self.target_map = target_map
        self.orientation = orientation
        self.trivialization = trivialization
        self.name = name or target_map.name

    @property
    def dimension(self):
        return self.domain.dimension

    @property
    def pieces(self):
        return [self]

    def reversed(self):
        return BoundedChain(self.domain, self.target_map, -self.orientation,
                            self.trivialization, '-' + self.name)


def fundamental_cycle(domain, name='', trivialization=None):
    """Identity map of a closed domain."""
    if not domain.is_closed():
        raise error.ArgumentError('domain %r is not closed' % domain)
    return GeometricCycle(domain, identity_map(domain.dimension),
                          trivialization=trivialization, name=name or 'fundamental')


def boundary(chain, keep_thin=False):
    """Oriented union of facet cycles, outward normal first.

    The facet x_i = b_i carries the sign (-1)^i, the facet x_i = a_i the
    opposite one. Collapsed facets are thin and dropped unless 'keep_thin'.
    """
    domain = chain.domain
    facets = [axis for axis in range(domain.dimension)
              if not domain.periodic[axis]]
    if not facets:
        raise error.ArgumentError('cycle has empty boundary')
    pieces = []
    for axis in facets:
        a, b = domain.bounds[axis]
        for end, value, sign in ((UPPER, b, 1), (LOWER, a, -1)):
            thin = (axis, end) in domain.collapsed
            if thin and not keep_thin:
                tf_cfg.dbg(4, "\tDropping thin facet %d/%d of %s"
                           % (axis, end, chain.name))
                continue
            embed = facet_embedding(domain.dimension, axis, value)
            triv = None
            if chain.trivialization is not None:
                triv = chain.trivialization.pullback(embed)
            orientation = chain.orientation * sign * (-1) ** axis
            pieces.append(GeometricCycle(domain.facet(axis),
                                         chain.target_map.compose(embed),
                                         orientation, triv,
                                         'd%s[%d=%g]' % (chain.name, axis, value),
                                         thin))
    return CycleUnion(pieces, 'd' + chain.name)


def is_thin(cycle, samples=8):
    """Whether every form of the cycle's degree integrates to zero on it.

    Declared collapsed facets are thin; otherwise all p x p minors of the
    coordinate Jacobian must vanish on a coarse grid.
    """
    if isinstance(cycle, CycleUnion):
        return all(is_thin(p, samples) for p in cycle.pieces)
    if cycle.thin:
        return True
    p = cycle.dimension
    if p == 0:
        return False
    coarse = cycle.domain.with_resolution(
        [min(n, samples) for n in cycle.domain.resolution])
    points, _ = quadrature_rule(coarse)
    jac = cycle.target_map.jacobian(points, cycle.domain.steps())
    for rows in itertools.combinations(range(jac.shape[1]), p):
        minors = np.linalg.det(jac[:, list(rows), :])
        if np.max(np.abs(minors)) > THIN_TOLERANCE:
            return False
    return True


def circle_product(cycle, resolution=None, name=''):
    """S^1 x z with the fiber axis first, s in [0, 2pi)."""
    if isinstance(cycle, CycleUnion):
        return CycleUnion([circle_product(p, resolution) for p in cycle.pieces],
                          name or 'S1x' + cycle.name)
    resolution = resolution or tf_cfg.cfg.resolution('fiber')
    circle = ChartDomain([(0.0, 2.0 * math.pi)], [True], [resolution])
    domain = circle.product(cycle.domain)
    inner = cycle.target_map
    p = cycle.dimension

    def evaluator(points):
        return np.concatenate([points[:, :1], inner(points[:, 1:])], axis=1)

    jac = None
    if inner.analytic_jacobian is not None:
        def jac(points):
            n = points.shape[0]
            out = np.zeros((n, inner.dim_target + 1, p + 1))
            out[:, 0, 0] = 1.0
            out[:, 1:, 1:] = inner.jacobian(points[:, 1:], None)
            return out
    product_map = SmoothMap(p + 1, inner.dim_target + 1, evaluator, jac,
                            'S1x' + inner.name)
    return GeometricCycle(domain, product_map, cycle.orientation, None,
                          name or 'S1x' + cycle.name, cycle.thin)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
