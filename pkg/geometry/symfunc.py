"""
Symmetric functions over a commutative ring.

Ring elements are anything closed under +, - and * that can also be scaled by
a Fraction: Fractions and ints for exact algebra, sympy expressions for
symbolic work, even scalar form samples (see forms.FormSample) for geometry.
The multiplicative unit is never needed by the Newton recurrences, so ring
elements do not have to provide one.
"""
import functools
import itertools
import math
from fractions import Fraction

import sympy

from helpers import error, tf_cfg

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'


def _check_count(k, available, what):
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise error.ArgumentError('index must be a positive integer, got %r'
                                  % (k,))
    if k > available:
        raise error.ArgumentError('%s up to %d required, only %d available'
                                  % (what, k, available))


def elementary_from_power(powers, k):
    """k-th elementary symmetric function from power sums p_1..p_k.

    Standard Newton recurrence:
        m e_m = sum_{i=1..m} (-1)^(i-1) e_{m-i} p_i,  e_0 = 1.
    """
    _check_count(k, len(powers), 'power sums')
    e = [None] * (k + 1)
    for m in range(1, k + 1):
        acc = powers[m - 1] if m % 2 else -powers[m - 1]
        for i in range(1, m):
            term = e[m - i] * powers[i - 1]
            acc = acc + term if i % 2 else acc - term
        e[m] = acc * Fraction(1, m)
    return e[k]


def power_from_elementary(elementaries, k):
    """k-th power sum from elementary symmetric functions e_1..e_k."""
    _check_count(k, len(elementaries), 'elementary symmetric functions')
    p = [None] * (k + 1)
    for m in range(1, k + 1):
        acc = elementaries[m - 1] * m
        if m % 2 == 0:
            acc = -acc
        for i in range(1, m):
            term = elementaries[i - 1] * p[m - i]
            acc = acc + term if i % 2 else acc - term
        p[m] = acc
    return p[k]


def elementary_symmetric(roots, k):
    """e_k(roots) by direct expansion over k-subsets."""
    if k == 0:
        return Fraction(1)
    total = Fraction(0)
    for subset in itertools.combinations(roots, k):
        total += functools.reduce(lambda a, b: a * b, subset)
    return total


def power_sums(roots, count):
    return [sum((x ** j for x in roots), Fraction(0))
            for j in range(1, count + 1)]


class EvenAggregate(object):
    """Graded even element sum_j component_j, component_j of degree 2j.

    Components follow the Chern character normalization: the j-th power sum is
    P_j = j! * component_j. Component 0 is the scalar part (rank), components
    beyond the last stored one are zero.
    """

    def __init__(self, components):
        if not components:
            raise error.ArgumentError('aggregate needs at least the scalar part')
        self.components = tuple(components)

    @property
    def top(self):
        return len(self.components) - 1

    def component(self, j):
        if j < 0:
            raise error.ArgumentError('negative component index %d' % j)
        if j > self.top:
            return 0
        return self.components[j]

    def power_sums(self, count=None):
        count = self.top if count is None else count
        _check_count(count, self.top, 'components')
        return [self.components[j] * math.factorial(j)
                for j in range(1, count + 1)]

    def __add__(self, other):
        size = max(len(self.components), len(other.components))
        comps = []
        for j in range(size):
            if j > self.top:
                comps.append(other.components[j])
            elif j > other.top:
                comps.append(self.components[j])
            else:
                comps.append(self.components[j] + other.components[j])
        return EvenAggregate(comps)

    def __len__(self):
        return len(self.components)

    def __repr__(self):
        return 'EvenAggregate(%r)' % (self.components,)


def sk_of_aggregate(agg, k):
    """The s_k operator: k-th elementary function of the aggregate's power sums.

    With P_j = j! component_j, s_k(ch) is the k-th Chern class data.
    """
    _check_count(k, agg.top, 'aggregate components')
    return elementary_from_power(agg.power_sums(k), k)


class SymPolynomial(object):
    """Exact rational polynomial in power sum indeterminates u_1..u_J."""

    def __init__(self, poly):
        self.poly = poly

    @property
    def gens(self):
        return self.poly.gens

    @property
    def nvars(self):
        return len(self.poly.gens)

    def terms(self):
        """(exponents, Fraction) pairs, zero polynomial has no terms."""
        for monom, coeff in self.poly.terms():
            if coeff == 0:
                continue
            coeff = sympy.Rational(coeff)
            yield monom, Fraction(int(coeff.p), int(coeff.q))

    def weight(self):
        """Weighted degree, u_j has weight j."""
        weights = [sum((j + 1) * e for j, e in enumerate(monom))
                   for monom, _ in self.terms()]
        return max(weights) if weights else 0

    def is_constant(self):
        return all(not any(monom) for monom, _ in self.terms())

    def evaluate(self, values, one=Fraction(1)):
        """Evaluate on ring elements substituted for u_1, u_2, ...

        'one' is the ring unit, it multiplies the constant monomial.
        """
        acc = None
        for monom, coeff in self.terms():
            product = None
            for j, exp in enumerate(monom):
                if not exp:
                    continue
                if j >= len(values):
                    raise error.ArgumentError('value for u_%d is missing' % (j + 1))
                for _ in range(exp):
                    product = values[j] if product is None else product * values[j]
            if product is None:
                product = one
            term = product * coeff
            acc = term if acc is None else acc + term
        if acc is None:
            return one * 0
        return acc

    def __call__(self, *values):
        return self.evaluate(list(values))

    def __eq__(self, other):
        if isinstance(other, SymPolynomial):
            return self.poly == other.poly
        return NotImplemented

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return 'SymPolynomial(%s)' % self.poly.as_expr()


def power_symbols(count):
    return sympy.symbols('u1:%d' % (count + 1))


@functools.lru_cache(maxsize=None)
def sk_polynomial(k, J):
    """s_k as a polynomial in the power sums u_1..u_J."""
    _check_count(k, J, 'power sums')
    u = power_symbols(J)
    expr = sympy.expand(elementary_from_power(list(u[:k]), k))
    return SymPolynomial(sympy.Poly(expr, *u, domain='QQ'))


@functools.lru_cache(maxsize=None)
def sk_partial_derivative(k, j, J):
    """d s_k / d P_j as an exact polynomial, depends on P_1..P_{k-j} only."""
    for index in (k, j, J):
        if isinstance(index, bool) or not isinstance(index, int):
            raise error.ArgumentError('indices must be integers, got %r'
                                      % ((k, j, J),))
    if not 1 <= j <= k <= J:
        raise error.ArgumentError('need 1 <= j <= k <= J, got j=%d k=%d J=%d'
                                  % (j, k, J))
    u = power_symbols(J)
    expr = sympy.expand(elementary_from_power(list(u[:k]), k))
    tf_cfg.dbg(4, "\tds_%d/dP_%d from s_%d = %s" % (k, j, k, expr))
    return SymPolynomial(sympy.Poly(sympy.diff(expr, u[j - 1]), *u, domain='QQ'))

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
