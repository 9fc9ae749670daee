"""Numba-compiled kernels: explicit loops, one pass over sources per point.

Same call surface as kernels._numpy. fastmath stays off so that summation
order is fixed and symmetric configurations cancel exactly.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def field_values(points, sources, weights):
    m, dim = points.shape
    n = sources.shape[0]
    values = np.empty(m, dtype=np.float64)
    min_sq = np.empty(m, dtype=np.float64)
    for a in range(m):
        acc = 0.0
        best = np.inf
        for i in range(n):
            sq = 0.0
            for k in range(dim):
                d = points[a, k] - sources[i, k]
                sq += d * d
            if sq > 0.0:
                acc += weights[i] / sq
            else:
                acc = np.inf  # caller rejects via min_sq
            if sq < best:
                best = sq
        values[a] = acc
        min_sq[a] = best
    return values, min_sq


@njit(cache=True)
def field_gradients(points, sources, weights):
    m, dim = points.shape
    n = sources.shape[0]
    grads = np.zeros((m, dim), dtype=np.float64)
    min_sq = np.empty(m, dtype=np.float64)
    for a in range(m):
        best = np.inf
        for i in range(n):
            sq = 0.0
            for k in range(dim):
                d = points[a, k] - sources[i, k]
                sq += d * d
            if sq > 0.0:
                coef = -2.0 * weights[i] / (sq * sq)
                for k in range(dim):
                    grads[a, k] += coef * (points[a, k] - sources[i, k])
            if sq < best:
                best = sq
        min_sq[a] = best
    return grads, min_sq


@njit(cache=True)
def field_laplacians(points, sources, weights):
    m, dim = points.shape
    n = sources.shape[0]
    laps = np.empty(m, dtype=np.float64)
    min_sq = np.empty(m, dtype=np.float64)
    coef = 8.0 - 2.0 * dim
    for a in range(m):
        acc = 0.0
        best = np.inf
        for i in range(n):
            sq = 0.0
            for k in range(dim):
                d = points[a, k] - sources[i, k]
                sq += d * d
            if sq > 0.0:
                acc += weights[i] / (sq * sq)
            else:
                acc = np.inf
            if sq < best:
                best = sq
        laps[a] = coef * acc
        min_sq[a] = best
    return laps, min_sq
