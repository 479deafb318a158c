"""
Work splitting for quadrature and sampling.

Work items are cut by a fixed chunk size taken from the configuration, never by
the number of threads, so every reduction sees the same partial results in the
same order whatever the parallelism is.
"""
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import error, tf_cfg

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'


def threads():
    return tf_cfg.cfg.threads()


def chunk_size():
    return max(1, tf_cfg.cfg.get_int('General', 'chunk'))


def chunks(n, size=None):
    """Slices covering range(n) in order."""
    size = size or chunk_size()
    return [slice(start, min(start + size, n)) for start in range(0, n, size)]


def map_ordered(fn, items):
    """Apply 'fn' to every item, results are returned in item order."""
    items = list(items)
    workers = min(threads(), len(items))
    if workers <= 1:
        return [fn(item) for item in items]
    tf_cfg.dbg(4, "\tRunning %d work items on %d threads" % (len(items), workers))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def evaluate_chunked(fn, points):
    """Evaluate a vectorized function on (n, dim) points chunk by chunk."""
    n = points.shape[0]
    parts = map_ordered(lambda sl: fn(points[sl]), chunks(n))
    if not parts:
        return fn(points)
    error.assertTrue(all(len(p) == sl.stop - sl.start
                         for p, sl in zip(parts, chunks(n))),
                     "chunked evaluation returned a wrong number of rows")
    return np.concatenate(parts, axis=0)


def weighted_sum(fn, points, weights):
    """Sum of fn(points) * weights with a fixed reduction order.

    Every chunk is reduced by numpy pairwise summation, chunk partials are then
    combined by math.fsum, which is exact and does not depend on order.
    """
    def partial(sl):
        values = np.asarray(fn(points[sl]), dtype=complex)
        return np.sum(values * weights[sl])
    parts = map_ordered(partial, chunks(points.shape[0]))
    return complex(math.fsum(p.real for p in parts),
                   math.fsum(p.imag for p in parts))

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
