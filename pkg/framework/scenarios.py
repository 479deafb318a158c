"""
Scenario harness: named suites of checks with tolerances and JSON reports.

A scenario is a function of a ScenarioContext; every ctx.check() records one
{expected, computed, tolerance} entry. A check whose computation raises is
recorded as failed with the error text, the remaining checks still run.
"""
import contextlib
import json
import math
import time
from fractions import Fraction

import numpy as np
import sympy

from geometry import (charforms, connections, diffchar, forms, mesh, symbolic,
                      symfunc)
from helpers import error, tf_cfg
from . import bundles, characters, cycles, manifolds, specs

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'

SCHEMA = 1

scenario_defs = {}


class Check(object):

    def __init__(self, check_id, expected, computed, tolerance, circle=False,
                 error_text=None):
        self.check_id = check_id
        self.expected = expected
        self.computed = computed
        self.tolerance = tolerance
        self.circle = circle
        self.error = error_text

    def distance(self):
        if self.circle:
            return diffchar.circle_distance(self.computed, self.expected)
        return abs(self.computed - self.expected)

    @property
    def passed(self):
        if self.error is not None or self.computed is None:
            return False
        d = self.distance()
        return not math.isnan(d) and d <= self.tolerance

    def as_dict(self):
        return {'check_id': self.check_id,
                'expected': self.expected,
                'computed': self.computed,
                'tolerance': self.tolerance,
                'circle': self.circle,
                'pass': self.passed,
                'error': self.error}


class Report(object):

    def __init__(self, scenario, parameters, resolution):
        self.scenario = scenario
        self.parameters = parameters
        self.resolution = resolution
        self.checks = []
        self.timing = None

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failed(self):
        return [c for c in self.checks if not c.passed]

    def as_dict(self, timing=False):
        out = {'schema': SCHEMA,
               'scenario': self.scenario,
               'version': tf_cfg.cfg.get('General', 'version'),
               'parameters': self.parameters,
               'resolution': self.resolution,
               'checks': [c.as_dict() for c in self.checks],
               'passed': self.passed}
        if timing:
            out['timing'] = self.timing
        return out

    def to_json(self, timing=False):
        return json.dumps(self.as_dict(timing), indent=2, sort_keys=True)

    def summary(self):
        lines = ['%s: %s (%d checks, %d failed)'
                 % (self.scenario, 'PASS' if self.passed else 'FAIL',
                    len(self.checks), len(self.failed()))]
        for c in self.failed():
            if c.error is not None:
                lines.append('    %s: error: %s' % (c.check_id, c.error))
            else:
                lines.append('    %s: expected %r, computed %r, tolerance %g'
                             % (c.check_id, c.expected, c.computed,
                                c.tolerance))
        return '\n'.join(lines)


def _plain(value):
    """JSON friendly real number."""
    if isinstance(value, (bool, np.bool_)):
        return int(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return float(value)
    value = complex(value)
    return value.real


class ScenarioContext(object):

    def __init__(self, name, params, tolerance=None):
        self.name = name
        self.params = params
        self.tolerance_override = tolerance
        self.rng = np.random.RandomState(int(params.get('seed', 0) or 0))
        self.report = Report(name, params, resolution_snapshot())

    def param(self, key):
        return self.params.get(key)

    def integer(self, key):
        value = self.params.get(key)
        return None if value is None else int(round(float(value)))

    def number(self, key):
        value = self.params.get(key)
        return None if value is None else float(value)

    def tolerance(self, tol):
        """A [Tolerance] key or an explicit float; exact checks pass 0.0.

        An overriding tolerance replaces every nonzero one.
        """
        value = tf_cfg.cfg.tolerance(tol) if isinstance(tol, str) else float(tol)
        if self.tolerance_override is not None and value > 0:
            return self.tolerance_override
        return value

    def check(self, check_id, expected, computed, tol, circle=False):
        """Record one check, 'computed' may be a callable run here."""
        tolerance = self.tolerance(tol)
        expected = _plain(expected)
        try:
            if callable(computed):
                computed = computed()
            computed = _plain(computed)
        except Exception as e:
            tf_cfg.dbg(1, "\t%s/%s raised %s: %s" % (self.name, check_id,
                                                     type(e).__name__, e))
            entry = Check(check_id, expected, None, tolerance, circle,
                          '%s: %s' % (type(e).__name__, e))
            self.report.checks.append(entry)
            return entry
        entry = Check(check_id, expected, computed, tolerance, circle)
        tf_cfg.dbg(2, "\t%s/%s: expected %r computed %r -> %s"
                   % (self.name, check_id, expected, computed,
                      'ok' if entry.passed else 'FAIL'))
        self.report.checks.append(entry)
        return entry

    def sample(self, domain, count=None):
        return domain.sample(count or self.integer('samples') or 24, self.rng)


class Scenario(object):

    def __init__(self, name, run, defaults, description):
        self.name = name
        self.run = run
        self.defaults = defaults
        self.description = description

    def parameters(self, overrides=None):
        params = dict(self.defaults)
        for key, value in (overrides or {}).items():
            if key == 'tolerance':
                continue
            if key not in self.defaults:
                raise error.ArgumentError('scenario %s has no parameter %r '
                                          '(known: %s)'
                                          % (self.name, key,
                                             ', '.join(sorted(self.defaults))))
            params[key] = value
        return params


def register_scenario(name, run, defaults=None, description=''):
    """ Register scenario """
    tf_cfg.dbg(3, "Registering scenario %s" % name)
    scenario_defs[name] = Scenario(name, run, dict(defaults or {}),
                                   description)


def scenario_names():
    return list(scenario_defs)


def resolution_snapshot():
    return {key: tf_cfg.cfg.resolution(key)
            for key in tf_cfg.cfg.config['Resolution'].keys()}


@contextlib.contextmanager
def resolution_override(value):
    """Temporarily set every grid resolution to 'value'."""
    if value is None:
        yield
        return
    saved = resolution_snapshot()
    if not tf_cfg.cfg.set_resolution(value):
        raise error.ArgumentError('resolution %r is not an integer >= 4'
                                  % (value,))
    try:
        yield
    finally:
        for key, val in saved.items():
            tf_cfg.cfg.set_option('Resolution', key, val)


def run_scenario(name, overrides=None, resolution=None):
    """Run every check of a registered scenario and return its Report."""
    try:
        scenario = scenario_defs[name]
    except KeyError:
        raise error.ArgumentError('unknown scenario %r, known: %s'
                                  % (name, ', '.join(scenario_names())))
    overrides = dict(overrides or {})
    tolerance = overrides.get('tolerance')
    if tolerance is not None:
        tolerance = float(tolerance)
        if tolerance < 0:
            raise error.ArgumentError('negative tolerance %g' % tolerance)
    params = scenario.parameters(overrides)
    with resolution_override(resolution):
        ctx = ScenarioContext(name, params, tolerance)
        if tolerance is not None:
            ctx.report.parameters = dict(params, tolerance=tolerance)
        tf_cfg.dbg(1, "Running scenario %s %s" % (name, params))
        start = time.time()
        try:
            scenario.run(ctx)
        except Exception as e:
            ctx.check('setup', 0.0, lambda: _reraise(e), 0.0)
        ctx.report.timing = time.time() - start
    tf_cfg.dbg(1, "Scenario %s: %s" % (name,
                                      'PASS' if ctx.report.passed else 'FAIL'))
    return ctx.report


def _reraise(e):
    raise e


def verify_all(resolution=None):
    return [run_scenario(name, resolution=resolution)
            for name in scenario_names()]


def bundle(text, base=None):
    return bundles.build_bundle(specs.parse(text), base)


def cycle(text, b):
    return cycles.build_cycle(specs.parse(text), b)


def sup_difference(a, b, points):
    return forms.sup_norm(forms.add(a, forms.scale(b, -1.0)), points)


def frac_of(value):
    return diffchar.frac(float(np.real(value)))


# Cycles of dimension 2k - 1 for the flat bundle, by k.
FLAT_CYCLES = {
    1: ['latitude:theta0=pi/3', 'latitude:theta0=pi/3,w=1',
        'cap-boundary:theta0=2*pi/3', 'torus-loop:p=1,q=2,x0=0.3',
        'torus-loop:p=2,q=-1,w=-1', 'torus-loop:p=1,dim=3',
        'square-boundary:a=1', 'fiber:u=1'],
    2: ['torus:dim=3'],
}


def flat_vanishing(ctx):
    rank = ctx.integer('rank')
    for k, texts in sorted(FLAT_CYCLES.items()):
        for text in texts:
            ctx.check('chern%d/%s' % (k, text), 0.0,
                      lambda: characters.evaluate(
                          'chern:k=%d,bundle=trivial:rank=%d' % (k, rank),
                          text)[2],
                      'flat', circle=True)
    for text in FLAT_CYCLES[1]:
        ctx.check('euler/%s' % text, 0.0,
                  lambda: characters.evaluate(
                      'euler:bundle=trivial:rank=2,so=1', text)[2],
                  'flat', circle=True)
    b = bundle('trivial:rank=%d,base=sphere' % rank)
    sphere = cycle('sphere', b)
    ctx.check('period/S2', 0,
              lambda: diffchar.delta2_periods(diffchar.differential_chern(b, 1),
                                              [sphere])[0], 0.0)


def monopole_integrality(ctx):
    charges = [ctx.integer('n')] if ctx.param('n') is not None \
        else list(range(-2, 4))
    for n in charges:
        b = bundle('monopole:n=%d' % n)
        sphere = cycle('sphere', b)
        f = diffchar.differential_chern(b, 1)
        ctx.check('flux/n=%d' % n, n,
                  lambda: forms.integrate(f.curvature, sphere).real,
                  'integrality')
        ctx.check('period/n=%d' % n, n,
                  lambda: diffchar.delta2_periods(f, [sphere])[0], 0.0)


def holonomy_phase(b, loop):
    """-arg det(holonomy) / 2pi mod 1."""
    U = connections.parallel_transport(b, loop)
    return diffchar.frac(-np.angle(np.linalg.det(U)) / (2.0 * math.pi))


HOLONOMY_ANGLES = ['pi/6', 'pi/3', 'pi/2', '2*pi/3']


def holonomy_agreement(ctx):
    charges = [ctx.integer('n')] if ctx.param('n') is not None else [1, 2]
    for n in charges:
        b = bundle('monopole:n=%d' % n)
        f = diffchar.differential_chern(b, 1)
        for text in HOLONOMY_ANGLES:
            loop = cycle('latitude:theta0=%s' % text, b)
            theta0 = specs.parse_value(text, text, 0)
            cid = 'n=%d/theta0=%s' % (n, text)
            ctx.check('oracle/' + cid, holonomy_phase(b, loop),
                      lambda: f.evaluate(loop), 'holonomy', circle=True)
            ctx.check('analytic/' + cid,
                      diffchar.frac(n * (1.0 - math.cos(theta0)) / 2.0),
                      lambda: f.evaluate(loop), 'holonomy', circle=True)


def cap_angles(count):
    return [math.pi * j / (count + 1) for j in range(1, count + 1)]


def bounding_property(ctx):
    pairs = [('chern', bundle('monopole:n=%d' % ctx.integer('n'))),
             ('euler', bundle('ts2'))]
    for kind, b in pairs:
        f = (diffchar.differential_chern(b, 1) if kind == 'chern'
             else diffchar.differential_euler(b))
        for theta0 in cap_angles(ctx.integer('caps')):
            chain = cycles.cap_chain(theta0, b)
            ctx.check('%s/cap=%.6f' % (b.name, theta0),
                      frac_of(forms.integrate(f.curvature, chain)),
                      lambda: f.evaluate(mesh.boundary(chain)),
                      'bounding', circle=True)
        chain = cycles.cap_chain(math.pi / 3, b)
        pole = [p for p in mesh.boundary(chain, keep_thin=True).pieces
                if p.thin][0]
        ctx.check('%s/thin-facet' % b.name, 1,
                  lambda: mesh.is_thin(pole), 0.0)
        ctx.check('%s/thin-value' % b.name, 0.0, lambda: f.evaluate(pole),
                  'thin', circle=True)


def gauss_bonnet(ctx):
    b = bundle('ts2')
    f = diffchar.differential_euler(b)
    sphere = cycle('sphere', b)
    ctx.check('euler-integral', 2.0,
              lambda: forms.integrate(f.curvature, sphere).real, 'integrality')
    ctx.check('euler-period', 2,
              lambda: diffchar.delta2_periods(f, [sphere])[0], 0.0)
    for text, expected in (('pi/2', 0.0), ('2*pi/3', 0.5)):
        ctx.check('cap-boundary/theta0=%s' % text, expected,
                  lambda: characters.evaluate(
                      'euler,bundle=ts2', 'cap-boundary:theta0=%s' % text)[2],
                  'integrality', circle=True)


def instanton_charge(ctx):
    b = bundle('instanton:scale=%r' % ctx.number('scale'))
    s4 = cycle('s4', b)
    ctx.check('c2/S4', 1.0,
              lambda: forms.integrate(charforms.chern_form(b, 2), s4).real,
              'instanton')


def random_curvature(rng, rank, dim, count):
    """Anti-Hermitian matrix valued 2-form samples."""
    size = len(forms.multi_indices(dim, 2))
    x = (rng.standard_normal((count, size, rank, rank))
         + 1j * rng.standard_normal((count, size, rank, rank)))
    return forms.FormSample(2, dim, x - np.conj(np.swapaxes(x, -1, -2)))


def newton_mismatches(rng, trials):
    """Newton recurrences against direct expansion on random rational roots."""
    bad = 0
    for _ in range(trials):
        n = rng.randint(1, 7)
        roots = [Fraction(int(rng.randint(-9, 10)), int(rng.randint(1, 6)))
                 for _ in range(n)]
        powers = symfunc.power_sums(roots, n)
        elementary = [symfunc.elementary_symmetric(roots, k)
                      for k in range(1, n + 1)]
        for k in range(1, n + 1):
            if symfunc.elementary_from_power(powers, k) != elementary[k - 1]:
                bad += 1
            if symfunc.power_from_elementary(elementary, k) != powers[k - 1]:
                bad += 1
    return bad


def newton_bridge(ctx):
    count = ctx.integer('samples')
    for rank in (2, 3):
        omega = random_curvature(ctx.rng, rank, 6, count)
        for k in range(1, 4):
            if k > rank:
                ctx.check('U%d/c%d-vanishes' % (rank, k), 0.0,
                          lambda: charforms.chern_sample(omega, k).sup(),
                          'pointwise')
                continue
            ctx.check('U%d/c%d' % (rank, k), 0.0,
                      lambda: (charforms.chern_sample(omega, k)
                               - charforms.minors_sample(omega, k)).sup(),
                      'pointwise')
    ctx.check('newton-exact', 0,
              lambda: newton_mismatches(ctx.rng, ctx.integer('trials')), 0.0)


def transgression(ctx):
    seed = ctx.integer('seed')
    for dim in (2, 4):
        b0 = bundle('torus-random:seed=%d,dim=%d' % (seed, dim))
        b1 = bundle('torus-random:seed=%d,dim=%d' % (seed + 1, dim))
        points = ctx.sample(b0.base)
        for k in range(1, dim // 2 + 1):
            t = charforms.transgression_chern(b0, b1, k)
            diff = forms.add(charforms.chern_form(b1, k),
                             forms.scale(charforms.chern_form(b0, k), -1.0))
            ctx.check('T%d/k=%d' % (dim, k), 0.0,
                      lambda: sup_difference(forms.exterior_derivative(t),
                                             diff, points),
                      'transgression')


def choice_independence(ctx):
    n = ctx.integer('n')
    theta0 = ctx.param('theta0')
    b = bundle('monopole:n=%d' % n)
    f = diffchar.differential_chern(b, 1)
    z = cycle('latitude:theta0=%s' % theta0, b)
    value = f.evaluate(z)
    for w in range(-2, 3):
        zw = cycle('latitude:theta0=%s,w=%d' % (theta0, w), b)
        ctx.check('monopole/w=%d' % w, value, lambda: f.evaluate(zw), 'choice',
                  circle=True)
    ts2 = bundle('ts2')
    e = diffchar.differential_euler(ts2)
    base = e.evaluate(cycle('cap-boundary:theta0=%s' % theta0, ts2))
    for w in (-1, 1, 2):
        zw = cycle('cap-boundary:theta0=%s,w=%d' % (theta0, w), ts2)
        ctx.check('ts2/w=%d' % w, base, lambda: e.evaluate(zw), 'choice',
                  circle=True)
    # orientation preserving diffeomorphism of the circle
    u = sympy.Symbol('u', real=True)
    wobble = symbolic.smooth_map([u], [u + sympy.sin(u) / 2], 'wobble')
    ctx.check('reparametrized', value,
              lambda: f.evaluate(z.reparametrized(wobble)), 'choice',
              circle=True)
    ctx.check('reversed', diffchar.frac(-value),
              lambda: f.evaluate(z.reversed()), 'choice', circle=True)
    lat = z.target_map
    pulled = connections.pullback_bundle(b, lat, z.domain)
    ctx.check('naturality', value,
              lambda: diffchar.differential_chern(pulled, 1).evaluate(
                  mesh.fundamental_cycle(z.domain, 'S1',
                                         mesh.Trivialization(gauge='north'))),
              'choice', circle=True)


WHITNEY_PAIRS = [('monopole:n=1', 'monopole:n=2'),
                 ('torus-random:seed=1,rank=2,dim=4',
                  'torus-random:seed=2,rank=1,dim=4')]


def whitney(ctx):
    for left, right in WHITNEY_PAIRS:
        a, b = bundle(left), bundle(right)
        s = connections.direct_sum(a, b)
        lhs = diffchar.total_curvature(diffchar.total_differential_chern(s),
                                       s.base)
        rhs = charforms.wedge_total(charforms.total_chern_form(a),
                                    charforms.total_chern_form(b))
        points = ctx.sample(s.base)
        for j, expected in enumerate(rhs):
            got = lhs[j] if j < len(lhs) else forms.zero_form(2 * j, s.base)
            ctx.check('%s/c%d' % (s.name, j), 0.0,
                      lambda: sup_difference(got, expected, points),
                      'pointwise')
    a, b = bundle('monopole:n=1'), bundle('monopole:n=2')
    s = connections.direct_sum(a, b)
    sphere = cycle('sphere', s)
    ctx.check('period/%s' % s.name, 3,
              lambda: diffchar.delta2_periods(
                  diffchar.differential_chern(s, 1), [sphere])[0], 0.0)


TORUS_LOOPS = ['torus-loop:p=1,q=0', 'torus-loop:p=0,q=1',
               'torus-loop:p=1,q=1', 'torus-loop:p=1,q=-1',
               'torus-loop:p=2,q=1', 'torus-loop:p=1,q=2,x0=0.4',
               'torus-loop:p=1,q=0,y0=1.3', 'torus-loop:p=0,q=1,x0=2.1',
               'torus-loop:p=3,q=1,y0=0.7', 'torus-loop:p=1,q=3,x0=5']


def freed_lott(ctx):
    seed = ctx.integer('seed')
    b = bundle('torus-random:seed=%d' % seed)
    c1 = diffchar.differential_chern(b, 1)
    flat_phi = diffchar.fl_differential_chern(characters.generator(b, seed, 0),
                                              1)
    gen = characters.generator(b, seed + 1, ctx.number('amp'))
    fl = diffchar.fl_differential_chern(gen, 1)
    i2 = diffchar.from_form(gen.phi[0])
    for text in TORUS_LOOPS:
        z = cycle(text, b)
        value = c1.evaluate(z)
        ctx.check('phi=0/%s' % text, value, lambda: flat_phi.evaluate(z),
                  'freed_lott', circle=True)
        ctx.check('i2/%s' % text, i2.evaluate(z),
                  lambda: diffchar.frac(fl.lift(z) - c1.lift(z)),
                  'freed_lott', circle=True)
    points = ctx.sample(b.base)
    expected = forms.add(charforms.chern_form(b, 1),
                         forms.exterior_derivative(gen.phi[0]))
    ctx.check('curvature', 0.0,
              lambda: sup_difference(diffchar.delta1(fl), expected, points),
              'freed_lott')
    shift = forms.add(diffchar.fl_curvature(gen, 1),
                      forms.scale(charforms.chern_form(b, 1), -1.0))
    ctx.check('dT1', 0.0,
              lambda: sup_difference(
                  forms.exterior_derivative(diffchar.fl_transgression(gen, 1)),
                  shift, points),
              'transgression')


def seam_winding(g, samples=256):
    """Winding number of det g around the circle."""
    u = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)[:, None]
    det = np.linalg.det(g(u))
    steps = np.angle(np.roll(det, -1) / det)
    return float(np.sum(steps)) / (2.0 * math.pi)


def suspension_checks(ctx, m):
    E = bundle('suspension:m=%d' % m)
    g = diffchar.fiber_integrate_bundle(E)
    torus = mesh.fundamental_cycle(E.base, 'S1xS1')
    ctx.check('m=%d/flux' % m, m,
              lambda: forms.integrate(charforms.chern_form(E, 1), torus).real,
              'suspension')
    ctx.check('m=%d/seam-winding' % m, m, lambda: seam_winding(g),
              'suspension')
    upper = diffchar.fiber_integrate_character(
        diffchar.differential_chern(E, 1))
    lower = diffchar.odd_differential_chern(g, 0)
    flat = connections.flat_bundle(g.domain, g.rank)
    for u in (0.3, 1.0, 2.5):
        pt = cycles.build_cycle(specs.Spec('point', {'u': u}), flat)
        ctx.check('m=%d/diagram/u=%g' % (m, u), upper.evaluate(pt),
                  lambda: lower.evaluate(pt), 'suspension', circle=True)
        ctx.check('m=%d/odd/u=%g' % (m, u),
                  diffchar.frac(m * u / (2.0 * math.pi)),
                  lambda: lower.evaluate(pt), 'suspension', circle=True)
    ctx.check('m=%d/odd-curvature' % m, m,
              lambda: forms.integrate(lower.curvature,
                                      mesh.fundamental_cycle(g.domain)).real,
              'suspension')


def projection_checks(ctx):
    """int_S1 p*beta = 0 and int_S1 (ds/2pi) ^ p*beta = beta."""
    X = manifolds.circle()
    total = manifolds.suspension(X)
    u = sympy.Symbol('u', real=True)
    beta = symbolic.form(X, 1, [u], {(0,): sympy.cos(u) + sympy.sin(2 * u)},
                         1, 'beta')
    proj = mesh.SmoothMap(2, 1, lambda points: points[:, 1:],
                          lambda points: np.broadcast_to(
                              np.array([[0.0, 1.0]]), (points.shape[0], 1, 2)),
                          'p')
    pulled = forms.pullback(beta, proj, total)
    points = ctx.sample(X)
    ctx.check('int-p*beta', 0.0,
              lambda: forms.sup_norm(diffchar.fiber_integrate_form(pulled),
                                     points),
              'pointwise')
    ds = forms.scale(forms.coordinate_differential(total, 0),
                     1.0 / (2.0 * math.pi))
    ctx.check('int-ds^p*beta', 0.0,
              lambda: sup_difference(
                  diffchar.fiber_integrate_form(forms.wedge(ds, pulled)),
                  beta, points),
              'pointwise')


def suspension(ctx):
    winding = [ctx.integer('m')] if ctx.param('m') is not None else [-1, 1, 2]
    projection_checks(ctx)
    for m in winding:
        suspension_checks(ctx, m)
    alpha = ctx.number('alpha')
    g = bundles.phase_map(alpha)
    odd = diffchar.odd_differential_chern(g, 0)
    pt = cycles.build_cycle(specs.Spec('point'),
                            connections.flat_bundle(g.domain, g.rank))
    ctx.check('point/alpha=%g' % alpha,
              diffchar.frac(alpha / (2.0 * math.pi)),
              lambda: odd.evaluate(pt), 'suspension', circle=True)


def bianchi_residual(b, points):
    """dOmega - (Omega ^ theta - theta ^ Omega)."""
    theta = b.connection()
    omega = connections.curvature(b)
    rhs = forms.add(forms.wedge(omega, theta),
                    forms.scale(forms.wedge(theta, omega), -1.0))
    return sup_difference(forms.exterior_derivative(omega), rhs, points)


def calculus_sanity(ctx):
    seed = ctx.integer('seed')
    T3 = manifolds.torus(3)
    points = ctx.sample(T3)
    alpha = characters.random_phi(T3, seed)[0]
    xs = bundles.coordinates(3)
    f = symbolic.form(T3, 0, xs,
                      {(): bundles.trig_polynomial(ctx.rng, xs, 2, 3, 1.0)},
                      1, 'f')
    for form in (f, alpha):
        ctx.check('dd/%s' % form.name, 0.0,
                  lambda: forms.sup_norm(forms.exterior_derivative(
                      forms.exterior_derivative(form)), points),
                  'calculus')
    for text in ('torus-random:seed=%d,dim=3' % seed,
                 'so3-torus:seed=%d' % seed, 'instanton'):
        b = bundle(text)
        pts = ctx.sample(b.base, 8)
        ctx.check('bianchi/%s' % b.name, 0.0,
                  lambda: bianchi_residual(b, pts), 'bianchi')
    T2 = bundle('trivial:base=torus,dim=2')
    beta = characters.random_phi(T2.base, seed + 1)[0]
    for text in ('square:a=1', 'square:a=2.5,x0=3,y0=4'):
        chain = cycle(text, T2)
        ctx.check('stokes/%s' % text, 0.0,
                  lambda: abs(forms.integrate(beta, mesh.boundary(chain))
                              - forms.integrate(
                                  forms.exterior_derivative(beta), chain)),
                  'calculus')
    S2 = bundle('trivial:base=sphere')
    t, p = sympy.symbols('theta phi', real=True)
    gamma = symbolic.form(S2.base, 1, [t, p],
                          {(0,): sympy.sin(t) ** 2 * sympy.cos(p),
                           (1,): (1 - sympy.cos(t)) * (1 + sympy.sin(p) / 3)},
                          1, 'gamma')
    for theta0 in (math.pi / 4, 2.0):
        chain = cycles.cap_chain(theta0, S2)
        ctx.check('stokes/cap=%g' % theta0, 0.0,
                  lambda: abs(forms.integrate(gamma, mesh.boundary(chain))
                              - forms.integrate(
                                  forms.exterior_derivative(gamma), chain)),
                  'calculus')


register_scenario('flat-vanishing', flat_vanishing, {'rank': 2},
                  'characters of the product connection vanish')
register_scenario('monopole-integrality', monopole_integrality, {'n': None},
                  'first Chern numbers of the charge n monopoles')
register_scenario('holonomy-agreement', holonomy_agreement, {'n': None},
                  'c^_1 on latitudes against parallel transport')
register_scenario('bounding-property', bounding_property,
                  {'n': 1, 'caps': 10},
                  'f(dc) = int_c curvature on polar caps')
register_scenario('gauss-bonnet', gauss_bonnet, {},
                  'Euler class of TS^2')
register_scenario('instanton-charge', instanton_charge, {'scale': 1.0},
                  'second Chern number of the BPST instanton')
register_scenario('newton-bridge', newton_bridge,
                  {'seed': 0, 'samples': 1000, 'trials': 100},
                  's_k of the Chern character against principal minors')
register_scenario('transgression', transgression, {'seed': 1, 'samples': 24},
                  'dTc_k = c_k(b1) - c_k(b0) on T^2 and T^4')
register_scenario('choice-independence', choice_independence,
                  {'n': 1, 'theta0': 'pi/3'},
                  'frames, reparametrizations and pullbacks')
register_scenario('whitney', whitney, {'seed': 0, 'samples': 24},
                  'total Chern form of direct sums')
register_scenario('freed-lott', freed_lott,
                  {'seed': 3, 'amp': 0.5, 'samples': 24},
                  'Freed-Lott classes against c^_1 + i_2(phi)')
register_scenario('suspension', suspension,
                  {'m': None, 'alpha': 1.0, 'samples': 24},
                  'odd classes through suspension and fiber integration')
register_scenario('calculus-sanity', calculus_sanity,
                  {'seed': 0, 'samples': 24},
                  'dd = 0, Bianchi identity and Stokes formula')

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
