"""Pure-numpy kernels: vectorized fallback used when numba is unavailable
or disabled via INVSQFIELD_BACKEND=numpy.

All kernels take a batch of points with shape (m, D), a source array with
shape (n, D) and a weight array with shape (n,), and return the per-point
result together with the minimum squared source distance (the singularity
guard is applied by the callers, not here).
"""

import numpy as np

# Broadcasting allocates an (chunk, n, D) scratch block; cap it so huge
# grid sweeps do not blow up memory.
_CHUNK = 65536


def field_values(points, sources, weights):
    m = points.shape[0]
    values = np.empty(m, dtype=np.float64)
    min_sq = np.empty(m, dtype=np.float64)
    for a in range(0, m, _CHUNK):
        b = min(a + _CHUNK, m)
        diff = points[a:b, None, :] - sources[None, :, :]
        sq = np.einsum("ijk,ijk->ij", diff, diff)
        with np.errstate(divide="ignore"):  # caller rejects via min_sq
            values[a:b] = (weights[None, :] / sq).sum(axis=1)
        min_sq[a:b] = sq.min(axis=1)
    return values, min_sq


def field_gradients(points, sources, weights):
    m, dim = points.shape
    grads = np.empty((m, dim), dtype=np.float64)
    min_sq = np.empty(m, dtype=np.float64)
    for a in range(0, m, _CHUNK):
        b = min(a + _CHUNK, m)
        diff = points[a:b, None, :] - sources[None, :, :]
        sq = np.einsum("ijk,ijk->ij", diff, diff)
        with np.errstate(divide="ignore", invalid="ignore"):
            coef = weights[None, :] / (sq * sq)
            grads[a:b] = -2.0 * np.einsum("ij,ijk->ik", coef, diff)
        min_sq[a:b] = sq.min(axis=1)
    return grads, min_sq


def field_laplacians(points, sources, weights):
    m, dim = points.shape
    laps = np.empty(m, dtype=np.float64)
    min_sq = np.empty(m, dtype=np.float64)
    coef = 8.0 - 2.0 * dim
    for a in range(0, m, _CHUNK):
        b = min(a + _CHUNK, m)
        diff = points[a:b, None, :] - sources[None, :, :]
        sq = np.einsum("ijk,ijk->ij", diff, diff)
        with np.errstate(divide="ignore"):
            laps[a:b] = coef * (weights[None, :] / (sq * sq)).sum(axis=1)
        min_sq[a:b] = sq.min(axis=1)
    return laps, min_sq
