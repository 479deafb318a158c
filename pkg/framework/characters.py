"""
Registry of the differential characters reachable from the command line.

A factory returns the character together with the bundle its cycles are
built against: the bundle itself, or a flat bundle on X for the odd classes,
which act on maps X -> U(r) rather than on bundles.
"""
import numpy as np

from geometry import connections, diffchar, symbolic
from helpers import error, tf_cfg
from . import bundles, cycles, specs

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'

character_defs = {}


class CharacterDef(object):

    def __init__(self, name, factory, params, description):
        self.name = name
        self.factory = factory
        self.params = params
        self.description = description


def register_character(name, factory, params=(), description=''):
    """ Register character type """
    tf_cfg.dbg(3, "Registering character %s" % name)
    character_defs[name] = CharacterDef(name, factory, tuple(params),
                                        description)


def character_names():
    return sorted(character_defs)


def build_character(spec, base=None):
    """(character, bundle the cycles attach to) of a character spec."""
    try:
        cdef = character_defs[spec.name]
    except KeyError:
        raise error.SpecError('unknown character %r, known: %s'
                              % (spec.name, ', '.join(character_names())),
                              spec.text, 0)
    spec.check_keys(cdef.params)
    tf_cfg.dbg(2, "\tBuilding character %s" % spec.text)
    return cdef.factory(spec, base)


def _bundle(spec, base):
    return bundles.build_bundle(spec.nested('bundle'), base)


def chern(spec, base=None):
    b = _bundle(spec, base)
    return diffchar.differential_chern(b, spec.integer('k', 1)), b


def pontryagin(spec, base=None):
    b = _bundle(spec, base)
    return diffchar.differential_pontryagin(b, spec.integer('k', 1)), b


def euler(spec, base=None):
    b = _bundle(spec, base)
    return diffchar.differential_euler(b), b


def random_phi(base, seed, amplitude=0.5):
    """Odd forms phi_[1] (and phi_[3] from dimension 3) with trigonometric
    polynomial coefficients."""
    rng = np.random.RandomState(seed)
    dim = base.dimension
    xs = bundles.coordinates(dim)
    one = {(axis,): bundles.trig_polynomial(rng, xs, 1, 2, amplitude)
           for axis in range(dim)}
    phi = [symbolic.form(base, 1, xs, one, 1, 'phi1[%d]' % seed)]
    if dim >= 3:
        three = {(0, 1, 2): bundles.trig_polynomial(rng, xs, 1, 2, amplitude)}
        phi.append(symbolic.form(base, 3, xs, three, 1, 'phi3[%d]' % seed))
    return phi


def zero_phi(base):
    xs = bundles.coordinates(base.dimension)
    phi = [symbolic.form(base, 1, xs, {}, 1, 'phi1=0')]
    if base.dimension >= 3:
        phi.append(symbolic.form(base, 3, xs, {}, 1, 'phi3=0'))
    return phi


def generator(b, seed=0, amplitude=0.5):
    if amplitude == 0:
        return diffchar.FLGenerator(b, zero_phi(b.base))
    return diffchar.FLGenerator(b, random_phi(b.base, seed, amplitude))


def fl_chern(spec, base=None):
    b = _bundle(spec, base)
    gen = generator(b, spec.integer('seed', 0), spec.number('amp', 0.5))
    return diffchar.fl_differential_chern(gen, spec.integer('k', 1)), b


def clutching_map(spec):
    if spec.get('alpha') is not None:
        return bundles.phase_map(spec.number('alpha'))
    return bundles.winding_map(spec.integer('m', 1))


def odd_chern(spec, base=None):
    """c^odd_2k+1 of z^m on S^1 or of e^{i alpha} on a point."""
    g = clutching_map(spec)
    character = diffchar.odd_differential_chern(g, spec.integer('k', 0))
    return character, connections.flat_bundle(g.domain, g.rank,
                                               name=g.name)


register_character('chern', chern, ('k', 'bundle'),
                   'differential Chern class c^_k')
register_character('pontryagin', pontryagin, ('k', 'bundle'),
                   'differential Pontryagin class p^_k')
register_character('euler', euler, ('bundle',),
                   'differential Euler class')
register_character('fl-chern', fl_chern, ('k', 'seed', 'amp', 'bundle'),
                   'Freed-Lott class of the bundle with a random odd form')
register_character('odd-chern', odd_chern, ('k', 'm', 'alpha'),
                   'odd class of z^m on S^1 or of a constant phase')


def evaluate(character_text, cycle_text):
    """Value in [0, 1) of a character spec on a cycle spec."""
    cspec = specs.parse(character_text)
    zspec = specs.parse(cycle_text)
    base = cycles.cycle_base(zspec)
    character, b = build_character(cspec, base)
    z = cycles.build_cycle(zspec, b)
    value = character.evaluate(z)
    tf_cfg.dbg(1, "%s on %s: %.12f" % (character.name, z.name, value))
    return character, z, value

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
