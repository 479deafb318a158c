"""
Chart boxes of the built-in base manifolds.
"""
import math

from geometry import mesh
from helpers import error, tf_cfg

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'

PI = math.pi
TWO_PI = 2.0 * math.pi


def point():
    return mesh.ChartDomain([])


def circle(resolution=None):
    return mesh.ChartDomain([(0.0, TWO_PI)], [True],
                            [resolution or tf_cfg.cfg.resolution('loop')])


def sphere(resolution=None):
    """S^2 in (theta, phi), both poles collapse."""
    n = resolution or tf_cfg.cfg.resolution('sphere')
    return mesh.ChartDomain([(0.0, PI), (0.0, TWO_PI)], [False, True], [n, n],
                            [(0, mesh.LOWER), (0, mesh.UPPER)])


def torus(dim=2, resolution=None):
    if dim < 1:
        raise error.ArgumentError('torus of dimension %d' % dim)
    n = resolution or tf_cfg.cfg.resolution('torus')
    return mesh.ChartDomain([(0.0, TWO_PI)] * dim, [True] * dim, [n] * dim)


def s4(resolution=None):
    """S^4 in (chi, alpha, beta, gamma): polar angle and hyperspherical S^3."""
    n = resolution or tf_cfg.cfg.resolution('instanton')
    collapsed = [(axis, end) for axis in range(3)
                 for end in (mesh.LOWER, mesh.UPPER)]
    return mesh.ChartDomain([(0.0, PI), (0.0, PI), (0.0, PI), (0.0, TWO_PI)],
                            [False, False, False, True], [n] * 4, collapsed)


def suspension(base, resolution=None):
    """S^1 x base with the circle axis first."""
    return circle(resolution or tf_cfg.cfg.resolution('fiber')).product(base)


BASES = {
    'point': lambda dim: point(),
    'circle': lambda dim: circle(),
    'sphere': lambda dim: sphere(),
    'torus': lambda dim: torus(dim or 2),
    's4': lambda dim: s4(),
}


def by_name(name, dim=None):
    try:
        return BASES[name](dim)
    except KeyError:
        raise error.ArgumentError('unknown base %r, known: %s'
                                  % (name, ', '.join(sorted(BASES))))

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
