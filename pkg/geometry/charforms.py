"""
Characteristic forms of a connection and transgression forms between two.

Curvature is sampled once per point set; Chern forms are then built from the
power sum forms P_j = tr(((i/2pi) Omega)^j) with the Newton recurrence, the
wedge product being the ring multiplication.
"""
import itertools
import math

import numpy as np
from scipy import special

from helpers import error, tf_cfg
from . import connections, forms, symfunc

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'

CHERN = 'chern'
CHERN_CHARACTER = 'chern_character'
PONTRYAGIN = 'pontryagin'
EULER = 'euler'
POWER_SUM = 'power_sum'
TRANSGRESSION = 'transgression'

MAX_PFAFFIAN_RANK = 6
MAX_MINORS_RANK = 3

FACTOR = 0.5j / math.pi


class CharacteristicForm(forms.FormField):
    """Scalar form attached to a bundle: c_k, ch_j, p_k, Pf or P_j."""

    def __init__(self, kind, degree, domain, evaluator, bundle=None,
                 jacobian=None, index=None):
        name = kind if index is None else '%s_%d' % (kind, index)
        if bundle is not None:
            name = '%s(%s)' % (name, bundle.name)
        forms.FormField.__init__(self, degree, domain, evaluator, 1, jacobian,
                                 name)
        self.kind = kind
        self.index = index
        self.bundle = bundle


class TransgressionForm(CharacteristicForm):
    """Odd form T with dT = c(b1) - c(b0)."""

    def __init__(self, degree, domain, evaluator, endpoints, index, kind=CHERN):
        CharacteristicForm.__init__(self, TRANSGRESSION, degree, domain,
                                    evaluator, None, None, index)
        self.endpoints = endpoints
        self.characteristic = kind
        self.name = 'T%s_%d(%s,%s)' % (kind, index, endpoints[1].name,
                                       endpoints[0].name)


def _zero(kind, degree, b, index=None):
    zero = forms.zero_form(degree, b.base)
    return CharacteristicForm(kind, degree, b.base, zero.evaluator, b,
                              zero.analytic_jacobian, index)


def _constant(kind, b, value, index=None):
    const = forms.from_constant(b.base, 0, {(): value})
    return CharacteristicForm(kind, 0, b.base, const.evaluator, b,
                              const.analytic_jacobian, index)


def unit_sample(dim, npoints):
    return forms.FormSample.constant(dim, npoints)


def curvature_sample(b, points, gauge=None):
    return forms.FormSample(2, b.dimension,
                            connections.curvature(b, gauge)(points))


def power_sum_samples(omega, count):
    """[P_1..P_count] of a curvature sample, scalar samples."""
    scaled = omega * FACTOR
    powers = []
    current = scaled
    for j in range(1, count + 1):
        if j > 1:
            current = current * scaled
        powers.append(current.trace())
    return powers


def chern_sample(omega, k):
    if k == 0:
        return unit_sample(omega.dim, omega.npoints)
    return symfunc.elementary_from_power(power_sum_samples(omega, k), k)


def _check_index(k, what):
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise error.ArgumentError('%s index must be a non-negative integer, '
                                  'got %r' % (what, k))


def power_sum_form(b, j):
    """P_j = tr(((i/2pi) Omega)^j), zero when 2j exceeds the dimension."""
    _check_index(j, 'power sum')
    if j == 0:
        return _constant(POWER_SUM, b, float(b.rank), 0)
    if 2 * j > b.dimension:
        return _zero(POWER_SUM, 2 * j, b, j)

    def evaluator(points):
        return power_sum_samples(curvature_sample(b, points), j)[-1].values
    return CharacteristicForm(POWER_SUM, 2 * j, b.base, evaluator, b, index=j)


def chern_form(b, k):
    """c_k = s_k(ch) through the Newton recurrence on power sum forms."""
    _check_index(k, 'Chern')
    if k == 0:
        return _constant(CHERN, b, 1.0, 0)
    if 2 * k > b.dimension or k > b.rank:
        return _zero(CHERN, 2 * k, b, k)

    def evaluator(points):
        return chern_sample(curvature_sample(b, points), k).values
    return CharacteristicForm(CHERN, 2 * k, b.base, evaluator, b, index=k)


def chern_character_form(b):
    """EvenAggregate (rank, ch_1, ..., ch_m) with ch_j = P_j / j!, 2m <= dim."""
    comps = [_constant(CHERN_CHARACTER, b, float(b.rank), 0)]
    for j in range(1, b.dimension // 2 + 1):
        p = power_sum_form(b, j)

        def evaluator(points, p=p, j=j):
            return p(points) / math.factorial(j)
        comps.append(CharacteristicForm(CHERN_CHARACTER, 2 * j, b.base,
                                        evaluator, b, index=j))
    return symfunc.EvenAggregate(comps)


def sample_aggregate(aggregate, points):
    """EvenAggregate of form fields -> EvenAggregate of form samples."""
    return symfunc.EvenAggregate([c.sample(points) for c in aggregate.components])


def _require(b, structure, what):
    if b.structure != structure:
        raise error.ArgumentError('%s needs a %s bundle, %s is %s'
                                  % (what, structure, b.name, b.structure))


def pontryagin_form(b, k):
    """p_k = (-1)^k c_2k of the complexified curvature."""
    _require(b, connections.SPECIAL_ORTHOGONAL, 'Pontryagin form')
    _check_index(k, 'Pontryagin')
    if k == 0:
        return _constant(PONTRYAGIN, b, 1.0, 0)
    if 4 * k > b.dimension or 2 * k > b.rank:
        return _zero(PONTRYAGIN, 4 * k, b, k)
    sign = (-1) ** k

    def evaluator(points):
        return sign * chern_sample(curvature_sample(b, points), 2 * k).values
    return CharacteristicForm(PONTRYAGIN, 4 * k, b.base, evaluator, b, index=k)


def perfect_matchings(size):
    """(pairs, sign) for all perfect matchings of range(size)."""
    def matchings(items):
        if not items:
            yield ()
            return
        first = items[0]
        for i in range(1, len(items)):
            rest = items[1:i] + items[i + 1:]
            for tail in matchings(rest):
                yield ((first, items[i]),) + tail
    for pairs in matchings(tuple(range(size))):
        yield pairs, forms.permutation_sign([x for pair in pairs for x in pair])


def _entry(sample, i, j):
    return forms.FormSample(sample.degree, sample.dim,
                            sample.values[:, :, i:i + 1, j:j + 1])


def _check_pfaffian_rank(b):
    _require(b, connections.SPECIAL_ORTHOGONAL, 'Euler form')
    if b.rank % 2:
        raise error.ArgumentError('Euler form of odd rank %d' % b.rank)
    if b.rank > MAX_PFAFFIAN_RANK:
        raise error.ArgumentError('Pfaffian expansion of rank %d above %d'
                                  % (b.rank, MAX_PFAFFIAN_RANK))


def pfaffian_sample(omega):
    """Pf(Omega / 2pi) by perfect matching expansion."""
    n = omega.rank // 2
    scale = (2.0 * math.pi) ** -n
    total = 0
    for pairs, sign in perfect_matchings(omega.rank):
        term = None
        for i, j in pairs:
            entry = _entry(omega, i, j)
            term = entry if term is None else term * entry
        total = total + term * (sign * scale)
    return total


def euler_form(b):
    _check_pfaffian_rank(b)
    degree = b.rank
    if degree > b.dimension:
        return _zero(EULER, degree, b)

    def evaluator(points):
        return pfaffian_sample(curvature_sample(b, points)).values
    return CharacteristicForm(EULER, degree, b.base, evaluator, b)


def minors_sample(omega, k):
    """Sum of the k x k principal minors of (i/2pi) Omega, by permutations."""
    a = omega * FACTOR
    total = 0
    for rows in itertools.combinations(range(omega.rank), k):
        for perm in itertools.permutations(rows):
            term = None
            for r, c in zip(rows, perm):
                entry = _entry(a, r, c)
                term = entry if term is None else term * entry
            total = total + term * forms.permutation_sign(
                [rows.index(c) for c in perm])
    return total


def chern_form_by_minors(b, k):
    """t^k coefficient of det(I + (it/2pi) Omega) as a sum of principal minors."""
    _check_index(k, 'Chern')
    if b.rank > MAX_MINORS_RANK:
        raise error.ArgumentError('minor expansion of rank %d above %d'
                                  % (b.rank, MAX_MINORS_RANK))
    if k == 0:
        return _constant(CHERN, b, 1.0, 0)
    if 2 * k > b.dimension or k > b.rank:
        return _zero(CHERN, 2 * k, b, k)

    def evaluator(points):
        return minors_sample(curvature_sample(b, points), k).values
    return CharacteristicForm(CHERN, 2 * k, b.base, evaluator, b, index=k)


def total_chern_form(b):
    """[c_0, c_1, ..., c_m], m = min(rank, dim / 2)."""
    top = min(b.rank, b.dimension // 2)
    return [chern_form(b, k) for k in range(top + 1)]


def wedge_total(c, other):
    """Graded product of two total forms, truncated at the dimension."""
    domain = c[0].domain
    top = domain.dimension // 2
    out = []
    for k in range(top + 1):
        terms = [forms.wedge(c[i], other[k - i]) for i in range(k + 1)
                 if i < len(c) and k - i < len(other)]
        if not terms:
            out.append(forms.zero_form(2 * k, domain))
            continue
        acc = terms[0]
        for t in terms[1:]:
            acc = forms.add(acc, t)
        out.append(acc)
    return out


def periods(form, cycles):
    return [forms.integrate(form, z) for z in cycles]


def time_rule():
    """Gauss-Legendre nodes and weights on [0, 1]."""
    count = tf_cfg.cfg.resolution('time_nodes')
    x, w = special.roots_legendre(count)
    return (x + 1.0) / 2.0, w / 2.0


def _check_pair(b0, b1):
    if b0.base != b1.base:
        raise error.DomainError('transgression between bases %r and %r'
                                % (b0.base, b1.base))
    if b0.rank != b1.rank:
        raise error.ArgumentError('transgression between ranks %d and %d'
                                  % (b0.rank, b1.rank))


class _Path(object):
    """Samples along theta_t = theta_0 + t eta at fixed points."""

    def __init__(self, b0, b1, points):
        dim = b0.dimension
        c0, c1 = b0.connection(), b1.connection()
        self.dim = dim
        self.theta0 = c0(points)
        self.eta = c1(points) - self.theta0
        self.dtheta0 = forms.derivative_values(c0.jacobian(points), 1, dim)
        self.dtheta1 = forms.derivative_values(c1.jacobian(points), 1, dim)

    def eta_sample(self):
        return forms.FormSample(1, self.dim, self.eta)

    def curvature(self, t):
        theta = self.theta0 + t * self.eta
        values = connections.curvature_values(
            theta, (1.0 - t) * self.dtheta0 + t * self.dtheta1, self.dim)
        return forms.FormSample(2, self.dim, values)


def _chern_integrand(path, omega, k, J):
    """sum_j ds_k/dP_j(P(Omega_t)) ^ j tr((i/2pi) eta ^ ((i/2pi) Omega_t)^(j-1))."""
    npoints = omega.npoints
    one = unit_sample(path.dim, npoints)
    powers = power_sum_samples(omega, k)
    eta = path.eta_sample() * FACTOR
    scaled = omega * FACTOR
    identity = forms.FormSample.constant(path.dim, npoints, 1.0, omega.rank)
    total = 0
    for j in range(1, k + 1):
        coeff = symfunc.sk_partial_derivative(k, j, J).evaluate(powers, one)
        inner = (eta * scaled.power(j - 1, identity)).trace() * j
        total = total + coeff * inner
    return total


def transgression_chern(b0, b1, k):
    """Tc_k(b1, b0) with dTc_k = c_k(b1) - c_k(b0).

    Both connections are taken in their primary gauges; their difference must
    be tensorial there.
    """
    _check_pair(b0, b1)
    _check_index(k, 'Chern')
    degree = 2 * k - 1
    dim = b0.dimension
    if k == 0:
        raise error.ArgumentError('transgression of c_0')
    nodes, weights = time_rule()

    def evaluator(points):
        if degree > dim:
            return np.zeros((points.shape[0], 0, 1, 1), dtype=complex)
        path = _Path(b0, b1, points)
        total = 0
        for t, w in zip(nodes, weights):
            total = total + _chern_integrand(path, path.curvature(t), k, k) * w
        return total.values
    tf_cfg.dbg(3, "\tTransgression c_%d: %d time nodes" % (k, len(nodes)))
    return TransgressionForm(degree, b0.base, evaluator, (b0, b1), k)


def transgression_pontryagin(b0, b1, k):
    """(-1)^k Tc_2k of the complexified pair."""
    _require(b0, connections.SPECIAL_ORTHOGONAL, 'Pontryagin transgression')
    _require(b1, connections.SPECIAL_ORTHOGONAL, 'Pontryagin transgression')
    tc = transgression_chern(b0, b1, 2 * k)
    sign = (-1) ** k

    def evaluator(points):
        return sign * tc(points)
    return TransgressionForm(tc.degree, b0.base, evaluator, (b0, b1), k,
                             PONTRYAGIN)


def transgression_euler(b0, b1):
    """Polarized Pfaffian transgression, dT = Pf(Omega_1/2pi) - Pf(Omega_0/2pi)."""
    _check_pair(b0, b1)
    _check_pfaffian_rank(b0)
    _check_pfaffian_rank(b1)
    n = b0.rank // 2
    degree = 2 * n - 1
    dim = b0.dimension
    scale = (2.0 * math.pi) ** -n
    nodes, weights = time_rule()
    matchings = list(perfect_matchings(b0.rank))

    def evaluator(points):
        if degree > dim:
            return np.zeros((points.shape[0], 0, 1, 1), dtype=complex)
        path = _Path(b0, b1, points)
        eta = path.eta_sample()
        total = 0
        for t, w in zip(nodes, weights):
            omega = path.curvature(t)
            for pairs, sign in matchings:
                for m, (i, j) in enumerate(pairs):
                    term = _entry(eta, i, j)
                    for l, (p, q) in enumerate(pairs):
                        if l != m:
                            term = term * _entry(omega, p, q)
                    total = total + term * (sign * scale * w)
        return total.values
    return TransgressionForm(degree, b0.base, evaluator, (b0, b1), n, EULER)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
