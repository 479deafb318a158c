import math
import unittest

import numpy as np

from geometry import diffchar, forms
from helpers import tf_cfg

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2018-2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'


class GeometryTest(unittest.TestCase):
    """Base class of the geometry test cases.

    Subclasses may lower grid resolutions for the duration of each test by
    listing them in 'resolution', e.g. {'sphere': 64}; the configured values
    are restored in tearDown().
    """

    resolution = {}
    seed = 0

    def setUp(self):
        tf_cfg.dbg(3) # Step to the next line after name of test case.
        tf_cfg.dbg(3, '\tInit test case...')
        self.rng = np.random.RandomState(self.seed)
        self.__saved = {}
        for key, value in self.resolution.items():
            self.__saved[key] = tf_cfg.cfg.get('Resolution', key)
            tf_cfg.cfg.set_option('Resolution', key, value)

    def tearDown(self):
        for key, value in self.__saved.items():
            tf_cfg.cfg.set_option('Resolution', key, value)

    def sample(self, domain, count=16):
        """Random interior points of a chart domain."""
        return domain.sample(count, self.rng)

    def assertCircleAlmostEqual(self, first, second, tolerance, msg=None):
        """Equality of R/Z values up to the circle distance."""
        d = diffchar.circle_distance(float(np.real(first)),
                                     float(np.real(second)))
        if d > tolerance:
            self.fail(self._formatMessage(
                msg, '%r != %r mod 1 (distance %g > %g)'
                % (first, second, d, tolerance)))

    def assertSupLess(self, form, points, bound, msg=None):
        """Sup-norm of a form field (or of raw values) on points below bound."""
        if isinstance(form, forms.FormField):
            value = forms.sup_norm(form, points)
        else:
            value = float(np.max(np.abs(form))) if np.size(form) else 0.0
        if math.isnan(value) or value >= bound:
            self.fail(self._formatMessage(
                msg, 'sup norm %g is not below %g' % (value, bound)))

    def assertFormsClose(self, a, b, points, bound, msg=None):
        self.assertSupLess(forms.add(a, forms.scale(b, -1.0)), points, bound,
                           msg)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
