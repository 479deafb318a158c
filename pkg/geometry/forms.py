"""
Matrix-valued differential forms on chart domains.

Coefficients are stored on strictly increasing multi-indices in
itertools.combinations order; a p-form of rank r evaluated on n points is a
complex array of shape (n, C(dim, p), r, r). Scalar forms have r = 1.
"""
import functools
import itertools
import numbers
from fractions import Fraction

import numpy as np

from helpers import error, tf_cfg, workers
from . import mesh

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'


@functools.lru_cache(maxsize=None)
def multi_indices(dim, degree):
    if degree < 0 or degree > dim:
        return ()
    return tuple(itertools.combinations(range(dim), degree))


@functools.lru_cache(maxsize=None)
def index_of(dim, degree):
    return dict((idx, i) for i, idx in enumerate(multi_indices(dim, degree)))


def permutation_sign(seq):
    seq = list(seq)
    inversions = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq))
                     if seq[i] > seq[j])
    return -1 if inversions % 2 else 1


@functools.lru_cache(maxsize=None)
def wedge_table(dim, p, q):
    """(i, j, k, sign): dx^I_i ^ dx^J_j = sign dx^K_k for disjoint I, J."""
    target = index_of(dim, p + q)
    table = []
    for i, I in enumerate(multi_indices(dim, p)):
        for j, J in enumerate(multi_indices(dim, q)):
            if set(I) & set(J):
                continue
            table.append((i, j, target[tuple(sorted(I + J))],
                          permutation_sign(I + J)))
    return tuple(table)


@functools.lru_cache(maxsize=None)
def derivative_table(dim, p):
    """(i, axis, k, sign): d(f dx^I_i) = sum sign d_axis f dx^K_k."""
    target = index_of(dim, p + 1)
    table = []
    for i, I in enumerate(multi_indices(dim, p)):
        for axis in range(dim):
            if axis in I:
                continue
            K = tuple(sorted(I + (axis,)))
            table.append((i, axis, target[K], (-1) ** K.index(axis)))
    return tuple(table)


def _matrix_product(a, b):
    if a.shape[-1] == 1 or b.shape[-1] == 1:
        return a * b
    return np.matmul(a, b)


def wedge_values(a, p, b, q, dim):
    """Wedge of coefficient arrays, matrix product on values."""
    r = max(a.shape[-1], b.shape[-1])
    if a.shape[-1] != b.shape[-1] and min(a.shape[-1], b.shape[-1]) != 1:
        raise error.ArgumentError('cannot multiply %dx%d by %dx%d values'
                                  % (a.shape[-1], a.shape[-1], b.shape[-1],
                                     b.shape[-1]))
    out = np.zeros((a.shape[0], len(multi_indices(dim, p + q)), r, r),
                   dtype=complex)
    for i, j, k, sign in wedge_table(dim, p, q):
        prod = _matrix_product(a[:, i], b[:, j])
        if sign > 0:
            out[:, k] += prod
        else:
            out[:, k] -= prod
    return out


def derivative_values(partials, p, dim):
    """Coefficients of d from partials of shape (n, C(dim,p), r, r, dim)."""
    n, _, r, _ = partials.shape[:4]
    out = np.zeros((n, len(multi_indices(dim, p + 1)), r, r), dtype=complex)
    for i, axis, k, sign in derivative_table(dim, p):
        if sign > 0:
            out[:, k] += partials[:, i, :, :, axis]
        else:
            out[:, k] -= partials[:, i, :, :, axis]
    return out


def pullback_values(values, p, jac):
    """Transform coefficients by the minors of jac (n, dim_target, dim_source)."""
    n, dim_t, dim_s = jac.shape
    r = values.shape[-1]
    out = np.zeros((n, len(multi_indices(dim_s, p)), r, r), dtype=complex)
    if p == 0:
        out[:] = values
        return out
    for i, I in enumerate(multi_indices(dim_s, p)):
        cols = jac[:, :, list(I)]
        for k, K in enumerate(multi_indices(dim_t, p)):
            minor = np.linalg.det(cols[:, list(K), :])
            out[:, i] += minor[:, None, None] * values[:, k]
    return out


def _is_scalar(x):
    return isinstance(x, numbers.Number) and not isinstance(x, bool)


def _as_complex(x):
    if isinstance(x, Fraction):
        return float(x)
    return x


class FormSample(object):
    """Form coefficients at a fixed set of points, a commutative ring on even
    scalar forms; symfunc runs on it."""

    def __init__(self, degree, dim, values):
        self.degree = degree
        self.dim = dim
        self.values = values

    @classmethod
    def constant(cls, dim, npoints, value=1.0, rank=1):
        values = np.zeros((npoints, 1, rank, rank), dtype=complex)
        values[:, 0] = value * np.eye(rank)
        return cls(0, dim, values)

    @property
    def rank(self):
        return self.values.shape[-1]

    @property
    def npoints(self):
        return self.values.shape[0]

    def _check_add(self, other):
        if not isinstance(other, FormSample):
            if _is_scalar(other) and other == 0:
                return None
            raise error.ArgumentError('cannot add %r to a form sample' % (other,))
        if other.degree != self.degree:
            raise error.DegreeError('adding forms of degrees %d and %d'
                                    % (self.degree, other.degree))
        return other

    def __add__(self, other):
        other = self._check_add(other)
        if other is None:
            return self
        return FormSample(self.degree, self.dim,
                          self.values + other.values)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check_add(other)
        if other is None:
            return self
        return FormSample(self.degree, self.dim,
                          self.values - other.values)

    def __neg__(self):
        return FormSample(self.degree, self.dim, -self.values)

    def __mul__(self, other):
        if isinstance(other, FormSample):
            return FormSample(self.degree + other.degree, self.dim,
                              wedge_values(self.values, self.degree,
                                           other.values, other.degree, self.dim))
        if _is_scalar(other):
            return FormSample(self.degree, self.dim, self.values * _as_complex(other))
        return NotImplemented

    def __rmul__(self, other):
        if _is_scalar(other):
            return FormSample(self.degree, self.dim, self.values * _as_complex(other))
        return NotImplemented

    def trace(self):
        tr = np.trace(self.values, axis1=-2, axis2=-1)
        return FormSample(self.degree, self.dim, tr[:, :, None, None])

    def power(self, j, unit=None):
        """j-fold wedge power, 'unit' for j = 0."""
        if j == 0:
            return unit
        out = self
        for _ in range(j - 1):
            out = out * self
        return out

    def sup(self):
        if self.values.size == 0:
            return 0.0
        return float(np.max(np.abs(self.values)))


class FormField(object):
    """Closed-form p-form on a chart domain.

    'evaluator' maps (n, dim) points to coefficients (n, C(dim, p), r, r);
    'jacobian', when given, returns their partials (n, C(dim, p), r, r, dim).
    A degree above the dimension is allowed and means the zero form.
    """

    def __init__(self, degree, domain, evaluator, rank=1, jacobian=None,
                 name=''):
        if degree < 0:
            raise error.DegreeError('negative degree %d' % degree)
        self.degree = degree
        self.domain = domain
        self.rank = rank
        self.evaluator = evaluator
        self.analytic_jacobian = jacobian
        self.name = name or 'form%d' % degree

    @property
    def dim(self):
        return self.domain.dimension

    @property
    def ncomponents(self):
        return len(multi_indices(self.dim, self.degree))

    def shape(self, npoints):
        return (npoints, self.ncomponents, self.rank, self.rank)

    def __call__(self, points):
        points = np.asarray(points, dtype=float)
        shape = self.shape(points.shape[0])
        if self.ncomponents == 0:
            return np.zeros(shape, dtype=complex)
        values = np.asarray(self.evaluator(points), dtype=complex)
        if values.shape != shape:
            try:
                values = np.array(np.broadcast_to(values, shape))
            except ValueError:
                error.bug('evaluator of %s returned %s, expected %s'
                          % (self.name, values.shape, shape))
        return values

    def jacobian(self, points):
        points = np.asarray(points, dtype=float)
        shape = self.shape(points.shape[0]) + (self.dim,)
        if self.ncomponents == 0:
            return np.zeros(shape, dtype=complex)
        if self.analytic_jacobian is not None:
            values = np.asarray(self.analytic_jacobian(points), dtype=complex)
            if values.shape != shape:
                values = np.array(np.broadcast_to(values, shape))
            return values
        return mesh.central_difference(self, points, self.domain.steps())

    def sample(self, points):
        return FormSample(self.degree, self.dim, self(points))

    def is_zero_by_degree(self):
        return self.ncomponents == 0

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(other, -1.0))

    def __neg__(self):
        return scale(self, -1.0)

    def __mul__(self, other):
        if _is_scalar(other):
            return scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return 'FormField(%s, degree=%d, rank=%d, %r)' % (self.name, self.degree,
                                                          self.rank, self.domain)


def zero_form(degree, domain, rank=1):
    shape_tail = (len(multi_indices(domain.dimension, degree)), rank, rank)

    def evaluator(points):
        return np.zeros((points.shape[0],) + shape_tail, dtype=complex)

    def jacobian(points):
        return np.zeros((points.shape[0],) + shape_tail + (domain.dimension,),
                        dtype=complex)
    return FormField(degree, domain, evaluator, rank, jacobian, 'zero')


def scalar_form(domain, degree, components, name=''):
    """Scalar form from {multi-index: f(points) -> (n,)} coefficient functions."""
    slots = index_of(domain.dimension, degree)
    for idx in components:
        if tuple(idx) not in slots:
            raise error.DegreeError('multi-index %r is not an increasing %d-index '
                                    'in dimension %d' % (idx, degree,
                                                         domain.dimension))

    def evaluator(points):
        out = np.zeros((points.shape[0], len(slots), 1, 1), dtype=complex)
        for idx, fn in components.items():
            out[:, slots[tuple(idx)], 0, 0] = fn(points)
        return out
    return FormField(degree, domain, evaluator, 1, name=name)


def coordinate_differential(domain, axis):
    """dx_axis with its exact (zero) derivative."""
    return from_constant(domain, 1, {(axis,): 1.0}, name='dx%d' % axis)


def from_constant(domain, degree, components, rank=1, name=''):
    """Constant coefficients {multi-index: scalar or r x r matrix}."""
    slots = index_of(domain.dimension, degree)
    coeffs = np.zeros((len(slots), rank, rank), dtype=complex)
    for idx, val in components.items():
        val = np.asarray(val, dtype=complex)
        if val.ndim == 0:
            val = val * np.eye(rank)
        coeffs[slots[tuple(idx)]] = val

    def evaluator(points):
        return np.broadcast_to(coeffs, (points.shape[0],) + coeffs.shape)

    def jacobian(points):
        return np.zeros((points.shape[0],) + coeffs.shape + (domain.dimension,),
                        dtype=complex)
    return FormField(degree, domain, evaluator, rank, jacobian, name)


def _check_same_domain(a, b):
    if a.domain != b.domain:
        raise error.DomainError('forms live on different domains: %r and %r'
                                % (a.domain, b.domain))


def wedge(a, b):
    """a ^ b with shuffle signs; matrix product on values."""
    _check_same_domain(a, b)
    dim = a.dim
    if a.degree + b.degree > dim:
        raise error.DegreeError('wedge of degrees %d and %d overflows dimension %d'
                                % (a.degree, b.degree, dim))
    if a.rank != b.rank and min(a.rank, b.rank) != 1:
        raise error.ArgumentError('ranks %d and %d are not composable'
                                  % (a.rank, b.rank))

    def evaluator(points):
        return wedge_values(a(points), a.degree, b(points), b.degree, dim)
    return FormField(a.degree + b.degree, a.domain, evaluator,
                     max(a.rank, b.rank), name='(%s^%s)' % (a.name, b.name))


def exterior_derivative(a):
    """d(a), analytic partials when the form has them, else finite differences."""
    if a.degree >= a.dim:
        raise error.DegreeError('exterior derivative of a top degree form '
                                '(degree %d, dimension %d)' % (a.degree, a.dim))
    if a.analytic_jacobian is None:
        tf_cfg.dbg(5, "\tFD exterior derivative of %s" % a.name)

    def evaluator(points):
        return derivative_values(a.jacobian(points), a.degree, a.dim)
    return FormField(a.degree + 1, a.domain, evaluator, a.rank,
                     name='d%s' % a.name)


def pullback(a, target, domain=None):
    """Pull 'a' back along a cycle, a chain or a SmoothMap on 'domain'."""
    if isinstance(target, mesh.SmoothMap):
        smap = target
        if domain is None:
            raise error.ArgumentError('pullback along a bare map needs a domain')
    else:
        smap = target.target_map
        domain = target.domain
    if smap.dim_target != a.dim:
        raise error.DomainError('map %s lands in dimension %d, form lives in %d'
                                % (smap.name, smap.dim_target, a.dim))
    if a.degree > domain.dimension:
        return zero_form(a.degree, domain, a.rank)
    steps = domain.steps()
    p = a.degree

    def evaluator(points):
        return pullback_values(a(smap(points)), p, smap.jacobian(points, steps))
    return FormField(p, domain, evaluator, a.rank,
                     name='%s*%s' % (smap.name, a.name))


def trace(a):
    def evaluator(points):
        tr = np.trace(a(points), axis1=-2, axis2=-1)
        return tr[:, :, None, None]

    jac = None
    if a.analytic_jacobian is not None:
        def jac(points):
            tr = np.trace(a.jacobian(points), axis1=2, axis2=3)
            return tr[:, :, None, None, :]
    return FormField(a.degree, a.domain, evaluator, 1, jac, 'tr%s' % a.name)


def scale(a, c):
    c = _as_complex(c)

    def evaluator(points):
        return c * a(points)

    jac = None
    if a.analytic_jacobian is not None:
        def jac(points):
            return c * a.jacobian(points)
    return FormField(a.degree, a.domain, evaluator, a.rank, jac,
                     '%s*%s' % (c, a.name))


def add(a, b):
    _check_same_domain(a, b)
    if a.degree != b.degree:
        raise error.DegreeError('adding forms of degrees %d and %d'
                                % (a.degree, b.degree))
    if a.rank != b.rank:
        raise error.ArgumentError('adding forms of ranks %d and %d'
                                  % (a.rank, b.rank))

    def evaluator(points):
        return a(points) + b(points)

    jac = None
    if a.analytic_jacobian is not None and b.analytic_jacobian is not None:
        def jac(points):
            return a.jacobian(points) + b.jacobian(points)
    return FormField(a.degree, a.domain, evaluator, a.rank, jac,
                     '(%s+%s)' % (a.name, b.name))


def integrate(a, over):
    """Integral of a scalar form over a cycle, a chain or a union of them."""
    if a.rank != 1:
        raise error.ArgumentError('matrix-valued integrand %s, trace first'
                                  % a.name)
    total = 0j
    for piece in over.pieces:
        if piece.dimension != a.degree:
            raise error.DegreeError('integrating a %d-form over %d-dimensional %s'
                                    % (a.degree, piece.dimension, piece.name))
        f = pullback(a, piece)
        points, weights = mesh.quadrature_rule(piece.domain)
        tf_cfg.dbg(4, "\tIntegrating %s over %s on %d points"
                   % (a.name, piece.name, points.shape[0]))
        value = workers.weighted_sum(lambda pts: f(pts)[:, 0, 0, 0],
                                     points, weights)
        total += piece.orientation * value
    return total


def sup_norm(a, points):
    """Largest coefficient modulus of 'a' over the points."""
    values = workers.evaluate_chunked(a, np.asarray(points, dtype=float))
    if values.size == 0:
        return 0.0
    return float(np.max(np.abs(values)))

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
