"""
Differential characters: homomorphisms from cycles to R/Z with a curvature
form, such that f(dc) = int_c curvature mod Z for every chain c.

Characteristic class characters are evaluated on trivialized cycles as the
integral of the transgression form from the flat connection of the frame to
the pulled back connection.
"""
import math

import numpy as np
import sympy

from helpers import error, tf_cfg
from . import charforms, connections, forms, mesh, symbolic, symfunc

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'

# Suspension frames need the clutching map away from the branch cut of log.
BRANCH_MARGIN = 1e-3


def frac(x):
    """Canonical representative of x mod 1 in [0, 1)."""
    r = x - math.floor(x)
    return 0.0 if r >= 1.0 else r


def circle_distance(a, b):
    d = abs(a - b) % 1.0
    return min(d, 1.0 - d)


class DifferentialCharacter(object):
    """Degree 'degree' character, evaluated on (degree - 1)-cycles.

    'evaluator' returns a real lift of the value on one cycle piece;
    'trivializer' optionally supplies frames for cycles given without one.
    """

    def __init__(self, degree, curvature, evaluator, name='', trivializer=None):
        if curvature.degree != degree:
            raise error.DegreeError('character of degree %d with a curvature of '
                                    'degree %d' % (degree, curvature.degree))
        if curvature.rank != 1:
            raise error.ArgumentError('curvature must be a scalar form')
        self.degree = degree
        self.curvature = curvature
        self.evaluator = evaluator
        self.name = name or 'f'
        self.trivializer = trivializer

    @property
    def base(self):
        return self.curvature.domain

    def _prepare(self, piece):
        if piece.dimension != self.degree - 1:
            raise error.DegreeError('%s of degree %d evaluated on %d-dimensional %s'
                                    % (self.name, self.degree, piece.dimension,
                                       piece.name))
        if piece.trivialization is None and self.trivializer is not None:
            piece = piece.with_trivialization(self.trivializer(piece))
        return piece

    def lift(self, cycle):
        """Real lift, additive over the pieces of a union."""
        total = 0.0
        for piece in cycle.pieces:
            total += self.evaluator(self._prepare(piece))
        return total

    def evaluate(self, cycle):
        value = frac(self.lift(cycle))
        tf_cfg.dbg(4, "\t%s(%s) = %.12f" % (self.name, cycle.name, value))
        return value

    __call__ = evaluate

    def __add__(self, other):
        if other.degree != self.degree:
            raise error.DegreeError('adding characters of degrees %d and %d'
                                    % (self.degree, other.degree))
        a, b = self, other

        def evaluator(piece):
            return a.lift(piece) + b.lift(piece)
        return DifferentialCharacter(self.degree,
                                     forms.add(a.curvature, b.curvature),
                                     evaluator, '%s+%s' % (a.name, b.name),
                                     a.trivializer or b.trivializer)

    def __neg__(self):
        a = self
        return DifferentialCharacter(self.degree, forms.scale(a.curvature, -1.0),
                                     lambda piece: -a.lift(piece),
                                     '-' + a.name, a.trivializer)

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        return 'DifferentialCharacter(%s, degree=%d)' % (self.name, self.degree)


def _own_cycle(piece):
    """The piece as the identity cycle of its source domain."""
    return mesh.GeometricCycle(piece.domain,
                               mesh.identity_map(piece.dimension),
                               piece.orientation, name=piece.name)


def from_form(alpha):
    """i_2: z -> Re int_z alpha mod 1, curvature d(alpha)."""
    if alpha.rank != 1:
        raise error.ArgumentError('i_2 of a matrix-valued form, trace first')
    degree = alpha.degree + 1
    if alpha.degree < alpha.dim:
        curv = forms.exterior_derivative(alpha)
    else:
        curv = forms.zero_form(degree, alpha.domain)

    def evaluator(piece):
        return forms.integrate(alpha, piece).real
    return DifferentialCharacter(degree, curv, evaluator,
                                 'i2(%s)' % alpha.name)


def zero_character(domain, degree):
    return from_form(forms.zero_form(degree - 1, domain))


def _transgression_character(b, curvature, transgression, name, trivializer):
    def evaluator(piece):
        local = connections.restrict_to_cycle(b, piece)
        flat = connections.flat_bundle(piece.domain, b.rank, b.structure)
        form = transgression(flat, local)
        return forms.integrate(form, _own_cycle(piece)).real
    return DifferentialCharacter(curvature.degree, curvature, evaluator, name,
                                 trivializer)


def _default_trivializer(b):
    if b.clutching is None:
        return None
    return suspension_trivialization(b.clutching)


def differential_chern(b, k):
    """c^_k(E, nabla)(z) = int_M Tc_k(d_tau, nabla_z) mod 1."""
    if b.structure != connections.UNITARY:
        raise error.ArgumentError('differential Chern class of the %s bundle %s'
                                  % (b.structure, b.name))
    if k < 1:
        raise error.ArgumentError('differential Chern class index %d' % k)
    return _transgression_character(
        b, charforms.chern_form(b, k),
        lambda flat, local: charforms.transgression_chern(flat, local, k),
        'c^%d(%s)' % (k, b.name), _default_trivializer(b))


def differential_pontryagin(b, k):
    if b.structure != connections.SPECIAL_ORTHOGONAL:
        raise error.ArgumentError('differential Pontryagin class of the %s '
                                  'bundle %s' % (b.structure, b.name))
    if k < 1:
        raise error.ArgumentError('differential Pontryagin class index %d' % k)
    return _transgression_character(
        b, charforms.pontryagin_form(b, k),
        lambda flat, local: charforms.transgression_pontryagin(flat, local, k),
        'p^%d(%s)' % (k, b.name), None)


def differential_euler(b):
    return _transgression_character(
        b, charforms.euler_form(b), charforms.transgression_euler,
        'e^(%s)' % b.name, None)


def total_differential_chern(b):
    """[c^_1, ..., c^_m] with m = min(rank, dim / 2)."""
    top = min(b.rank, b.dimension // 2)
    return [differential_chern(b, k) for k in range(1, top + 1)]


def total_curvature(characters, domain):
    """1 + delta1(c^_1) + ... as a list of forms by degree."""
    return [forms.from_constant(domain, 0, {(): 1.0})] + \
        [delta1(f) for f in characters]


def delta1(f):
    return f.curvature


def delta2_periods(f, basis):
    """Integer periods of the curvature on closed cycles of matching degree."""
    limit = tf_cfg.cfg.tolerance('periods')
    out = []
    for z in basis:
        if z.dimension != f.degree:
            raise error.DegreeError('period of a %d-form on a %d-cycle %s'
                                    % (f.degree, z.dimension, z.name))
        period = forms.integrate(f.curvature, z).real
        nearest = int(round(period))
        if abs(period - nearest) > limit:
            raise error.IntegralityError('period %.9f of %s on %s is not '
                                         'integral' % (period, f.name, z.name),
                                         z, period)
        tf_cfg.dbg(3, "\tPeriod of %s on %s: %.9f" % (f.name, z.name, period))
        out.append(nearest)
    return out


def bounding_residual(f, chain):
    """Circle distance between f(dc) and int_c delta1(f) mod 1."""
    value = f.evaluate(mesh.boundary(chain))
    flux = forms.integrate(f.curvature, chain).real
    return circle_distance(value, frac(flux))


class FLGenerator(object):
    """Unitary bundle with odd forms phi[j - 1] of degree 2j - 1."""

    def __init__(self, bundle, phi):
        if bundle.structure != connections.UNITARY:
            raise error.ArgumentError('Freed-Lott generator on the %s bundle %s'
                                      % (bundle.structure, bundle.name))
        phi = list(phi)
        for j, form in enumerate(phi, 1):
            if form.degree != 2 * j - 1:
                raise error.DegreeError('phi_[%d] has degree %d'
                                        % (2 * j - 1, form.degree))
            if form.domain != bundle.base or form.rank != 1:
                raise error.DomainError('phi_[%d] is not a scalar form on %r'
                                        % (2 * j - 1, bundle.base))
            if form.analytic_jacobian is None and form.degree < form.dim:
                raise error.ArgumentError('phi_[%d] has no derivative evaluator'
                                          % (2 * j - 1))
        self.bundle = bundle
        self.phi = phi

    def component(self, j):
        if j <= len(self.phi):
            return self.phi[j - 1]
        return None


def _d_phi_values(form, points):
    """Coefficients of d(phi_[2j-1]) at points, zero past the dimension."""
    if form is None or form.degree >= form.dim:
        return None
    return forms.derivative_values(form.jacobian(points), form.degree, form.dim)


def _zero_sample(degree, dim, npoints):
    size = len(forms.multi_indices(dim, degree))
    return forms.FormSample(degree, dim,
                            np.zeros((npoints, size, 1, 1), dtype=complex))


def fl_aggregate(gen, points, t=1.0, count=None):
    """Samples of ch(nabla) + t d(phi) as an EvenAggregate."""
    b = gen.bundle
    count = count or b.dimension // 2
    ch = charforms.sample_aggregate(charforms.chern_character_form(b), points)
    comps = list(ch.components)
    while len(comps) <= count:
        comps.append(_zero_sample(2 * len(comps), b.dimension, points.shape[0]))
    for j in range(1, count + 1):
        dphi = _d_phi_values(gen.component(j), points)
        if dphi is not None:
            comps[j] = comps[j] + forms.FormSample(2 * j, b.dimension, t * dphi)
    return symfunc.EvenAggregate(comps)


def fl_curvature(gen, k):
    """s_k(ch(nabla) + d phi)."""
    b = gen.bundle
    if 2 * k > b.dimension:
        return forms.zero_form(2 * k, b.base)

    def evaluator(points):
        return symfunc.sk_of_aggregate(fl_aggregate(gen, points, 1.0, k), k).values
    return charforms.CharacteristicForm('fl_chern', 2 * k, b.base, evaluator, b,
                                        index=k)


def fl_transgression(gen, k):
    """T_k(phi) = int_0^1 sum_j ds_k/dP_j(ch + t d phi) ^ j! phi_[2j-1] dt."""
    b = gen.bundle
    degree = 2 * k - 1
    dim = b.dimension
    nodes, weights = charforms.time_rule()

    def evaluator(points):
        n = points.shape[0]
        one = charforms.unit_sample(dim, n)
        total = 0
        for t, w in zip(nodes, weights):
            agg = fl_aggregate(gen, points, t, k)
            powers = agg.power_sums(k)
            for j in range(1, k + 1):
                phi = gen.component(j)
                if phi is None:
                    continue
                coeff = symfunc.sk_partial_derivative(k, j, k).evaluate(powers,
                                                                        one)
                term = forms.FormSample(phi.degree, dim, phi(points))
                total = total + coeff * term * (math.factorial(j) * w)
        if isinstance(total, int):
            return np.zeros((n, len(forms.multi_indices(dim, degree)), 1, 1),
                            dtype=complex)
        return total.values
    return forms.FormField(degree, b.base, evaluator, name='T%d(phi)' % k)


def fl_differential_chern(gen, k):
    """c^_k(E) + i_2(T_k(phi)) with curvature s_k(ch(nabla) + d phi)."""
    base = differential_chern(gen.bundle, k)
    correction = from_form(fl_transgression(gen, k))

    def evaluator(piece):
        return base.lift(piece) + correction.lift(piece)
    return DifferentialCharacter(2 * k, fl_curvature(gen, k), evaluator,
                                 'c^FL%d(%s)' % (k, gen.bundle.name),
                                 base.trivializer)


def bump():
    """rho(s) = (s - sin s) / 2pi: rho(0) = 0, rho(2pi) = 1, rho' periodic."""
    s = sympy.Symbol('s', real=True)
    return s, (s - sympy.sin(s)) / (2 * sympy.pi)


def check_unitary(g, samples=connections.CHECK_SAMPLES):
    points = connections.coarse_points(g.domain, samples) \
        if g.domain.dimension else np.zeros((1, 0))
    values = g(points)
    eye = np.eye(g.rank)
    residual = np.max(np.abs(np.matmul(values, np.conj(np.swapaxes(values, -1, -2)))
                             - eye))
    if residual > 1e-8:
        raise error.ArgumentError('map %s is not unitary: residual %g'
                                  % (g.name, residual))


def suspend(g):
    """Bundle on S^1 x X with theta = -rho(s) dg g^-1, glued by g at s = 2pi."""
    if g.symbolic is None:
        raise error.ArgumentError('suspension of %s needs its symbolic form'
                                  % g.name)
    check_unitary(g)
    symbols, matrix = g.symbolic
    matrix = sympy.Matrix(matrix)
    s, rho = bump()
    circle = mesh.ChartDomain([(0.0, 2.0 * math.pi)], [True],
                              [tf_cfg.cfg.resolution('fiber')])
    base = circle.product(g.domain)
    inv = sympy.simplify(matrix.H)
    components = {}
    for i, x in enumerate(symbols):
        entry = sympy.simplify(-rho * sympy.diff(matrix, x) * inv)
        if entry != sympy.zeros(*entry.shape):
            components[(i + 1,)] = entry
    theta = symbolic.form(base, 1, [s] + list(symbols), components, g.rank,
                          'theta(S%s)' % g.name)

    def function(points):
        return g(points[:, 1:])

    def embed(points):
        return np.concatenate([np.zeros((points.shape[0], 1)), points], axis=1)

    def shift(points):
        out = np.array(points)
        out[:, 0] += 2.0 * math.pi
        return out
    seam = connections.Transition('box', 'box', function, g.domain, embed, shift)
    tf_cfg.dbg(2, "\tSuspending %s over %r" % (g.name, g.domain))
    return connections.BundleWithConnection(
        g.rank, connections.UNITARY, base,
        [connections.Gauge('box', theta)], [seam], 'S%s' % g.name, g)


def suspension_trivialization(g):
    """Frames exp(s log g / 2pi) over S^1 x z, cycles of the suspended base."""
    def trivializer(piece):
        smap = piece.target_map
        if piece.dimension >= 2:
            coarse = connections.coarse_points(piece.domain, 8)
            lam, _ = np.linalg.eig(g(smap(coarse)[:, 1:]))
            if np.max(np.abs(np.angle(lam))) > math.pi - BRANCH_MARGIN:
                raise error.TrivializationError(
                    'suspension frame over %s: %s reaches -1'
                    % (piece.name, g.name))

        def frame(points):
            y = smap(points)
            lam, vecs = np.linalg.eig(g(y[:, 1:]))
            phase = np.exp(y[:, :1] * np.log(lam) / (2.0 * math.pi))
            return np.matmul(vecs * phase[:, None, :], np.linalg.inv(vecs))
        return mesh.Trivialization(frame, 'box')
    return trivializer


def fiber_integrate_bundle(b):
    """K side of the suspension square: the clutching map of a suspension."""
    if b.clutching is None:
        raise error.ArgumentError('%s is not a suspended bundle' % b.name)
    return b.clutching


def _check_product(domain):
    if (domain.dimension < 1 or not domain.periodic[0]
            or abs(domain.bounds[0][0]) > 1e-12
            or abs(domain.bounds[0][1] - 2.0 * math.pi) > 1e-12):
        raise error.DomainError('%r is not a product with a circle [0, 2pi) '
                                'first' % domain)


def fiber_integrate_form(w):
    """Integral over the circle factor, fiber first: ds ^ beta -> int beta ds."""
    domain = w.domain
    _check_product(domain)
    if w.degree < 1:
        raise error.DegreeError('fiber integration of a 0-form')
    base = domain.facet(0)
    degree = w.degree - 1
    if degree > base.dimension:
        return forms.zero_form(degree, base, w.rank)
    n = domain.resolution[0]
    h = 2.0 * math.pi / n
    nodes = h * np.arange(n)
    full = forms.index_of(domain.dimension, w.degree)
    slots = [full[(0,) + tuple(i + 1 for i in idx)]
             for idx in forms.multi_indices(base.dimension, degree)]

    def lift(points):
        m = points.shape[0]
        s = np.repeat(nodes, m)[:, None]
        return np.concatenate([s, np.tile(points, (n, 1))], axis=1), m

    def evaluator(points):
        pts, m = lift(points)
        values = w(pts)[:, slots]
        return h * values.reshape((n, m) + values.shape[1:]).sum(axis=0)

    jac = None
    if w.analytic_jacobian is not None:
        def jac(points):
            pts, m = lift(points)
            values = w.jacobian(pts)[:, slots][..., 1:]
            return h * values.reshape((n, m) + values.shape[1:]).sum(axis=0)
    return forms.FormField(degree, base, evaluator, w.rank, jac,
                           'int_S1 %s' % w.name)


def fiber_integrate_character(f):
    """z -> f(S^1 x z) with reversed orientation, curvature fiber integrated."""
    domain = f.base
    _check_product(domain)
    if f.degree < 2:
        raise error.DegreeError('fiber integration of a degree %d character'
                                % f.degree)
    if f.degree - 2 > domain.dimension - 1:
        raise error.DegreeError('degree %d character over a %d-dimensional base'
                                % (f.degree - 1, domain.dimension - 1))
    curv = fiber_integrate_form(f.curvature)
    resolution = domain.resolution[0]

    def evaluator(piece):
        return -f.lift(mesh.circle_product(piece, resolution))
    return DifferentialCharacter(f.degree - 1, curv, evaluator,
                                 'int_S1 %s' % f.name)


def odd_differential_chern(g, k):
    """c^odd_2k+1 = int_S1 c^_k+1(suspend(g))."""
    if 2 * k + 1 > g.domain.dimension + 1:
        raise error.DegreeError('odd class of degree %d over a %d-dimensional '
                                'base' % (2 * k + 1, g.domain.dimension))
    character = fiber_integrate_character(differential_chern(suspend(g), k + 1))
    character.name = 'c^odd%d(%s)' % (2 * k + 1, g.name)
    return character

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
