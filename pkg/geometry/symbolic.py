"""
Forms, maps and frames given by sympy expressions.

Coefficients are lambdified entry by entry for numpy; partial derivatives are
taken symbolically, so built-in connections carry exact Jacobians.
"""
import numpy as np
import sympy

from helpers import error, tf_cfg
from . import connections, forms, mesh

__author__ = 'Tempesta Technologies, Inc.'
__copyright__ = 'Copyright (C) 2023 Tempesta Technologies, Inc.'
__license__ = 'GPL2'


def _shape_and_flat(exprs):
    if not isinstance(exprs, (list, tuple)):
        return (), [sympy.sympify(exprs)]
    parts = [_shape_and_flat(e) for e in exprs]
    inner = parts[0][0] if parts else ()
    if any(p[0] != inner for p in parts):
        raise error.ArgumentError('ragged expression array')
    return (len(exprs),) + inner, [x for p in parts for x in p[1]]


def lambdify_array(symbols, exprs, dtype=complex):
    """Vectorized evaluator of a nested list of expressions.

    Returns fn(points) -> array of shape (n,) + shape(exprs); zero entries
    are not evaluated at all.
    """
    shape, flat = _shape_and_flat(exprs)
    funcs = []
    for k, e in enumerate(flat):
        if e == 0:
            continue
        funcs.append((k, sympy.lambdify(symbols, e, modules='numpy')))
    nsym = len(symbols)

    def fn(points):
        points = np.asarray(points, dtype=float)
        n = points.shape[0]
        out = np.zeros((n, len(flat)), dtype=dtype)
        cols = [points[:, i] for i in range(nsym)]
        for k, f in funcs:
            out[:, k] = f(*cols)
        return out.reshape((n,) + shape)
    return fn


def _as_matrix(expr, rank):
    if isinstance(expr, sympy.MatrixBase):
        if expr.shape != (rank, rank):
            raise error.ArgumentError('expected %dx%d matrix, got %s'
                                      % (rank, rank, expr.shape))
        return expr
    return sympy.Matrix([[expr]]) if rank == 1 else expr * sympy.eye(rank)


def form(domain, degree, symbols, components, rank=1, name=''):
    """FormField from {multi-index: sympy expression or Matrix}."""
    dim = domain.dimension
    if len(symbols) != dim:
        raise error.DomainError('%d symbols for a %d-dimensional domain'
                                % (len(symbols), dim))
    slots = forms.index_of(dim, degree)
    coeffs = [[[sympy.S.Zero] * rank for _ in range(rank)]
              for _ in range(len(slots))]
    for idx, expr in components.items():
        idx = tuple(idx)
        if idx not in slots:
            raise error.DegreeError('multi-index %r is not an increasing '
                                    '%d-index in dimension %d'
                                    % (idx, degree, dim))
        mat = _as_matrix(sympy.sympify(expr), rank)
        for a in range(rank):
            for b in range(rank):
                coeffs[slots[idx]][a][b] = mat[a, b]
    partials = [[[[sympy.diff(coeffs[i][a][b], x) for x in symbols]
                  for b in range(rank)] for a in range(rank)]
                for i in range(len(slots))]
    tf_cfg.dbg(5, "\tLambdifying %s: %d components" % (name, len(slots)))
    evaluator = lambdify_array(symbols, coeffs)
    jacobian = lambdify_array(symbols, partials)
    return forms.FormField(degree, domain, evaluator, rank, jacobian, name)


def smooth_map(symbols, exprs, name=''):
    """SmoothMap with the symbolic Jacobian."""
    exprs = [sympy.sympify(e) for e in exprs]
    jac = [[sympy.diff(e, x) for x in symbols] for e in exprs]
    return mesh.SmoothMap(len(symbols), len(exprs),
                          lambdify_array(symbols, exprs, float),
                          lambdify_array(symbols, jac, float), name)


def matrix_function(symbols, matrix):
    """(values, jacobian) evaluators of a matrix-valued function."""
    matrix = sympy.Matrix(matrix)
    rank = matrix.shape[0]
    entries = [[matrix[a, b] for b in range(rank)] for a in range(rank)]
    partials = [[[sympy.diff(matrix[a, b], x) for x in symbols]
                 for b in range(rank)] for a in range(rank)]
    return lambdify_array(symbols, entries), lambdify_array(symbols, partials)


def matrix_map(domain, symbols, matrix, name=''):
    """connections.MatrixMap that keeps its symbolic form."""
    matrix = sympy.Matrix(matrix)
    values, jacobian = matrix_function(symbols, matrix)
    return connections.MatrixMap(domain, matrix.shape[0], values, jacobian,
                                 name, (list(symbols), matrix))


def frame(symbols, matrix, gauge=None):
    """Trivialization whose frame is a sympy matrix of source coordinates."""
    values, jacobian = matrix_function(symbols, matrix)
    return mesh.Trivialization(values, gauge, jacobian)

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
