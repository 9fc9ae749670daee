"""Cross-polytope source configuration and its symmetric closed forms.

The configuration places 2 D unit-weight sources at +-1/2 along each
coordinate axis, all on the sphere of radius 1/2 around the origin. For
offsets strictly inside that sphere the field value has a closed symmetric
form, with matching upper/lower bounds whose gap against the center value
8 D reduces to small even polynomials in the offset radius.
"""

import numpy as np

from .errors import DeltaOutOfRange, DimensionMismatch
from .field import SourceSet

#: Offsets must stay strictly inside the source sphere of radius 1/2.
MAX_RADIUS = 0.5


def cross_polytope_sources(dim: int) -> SourceSet:
    """SourceSet with 2*dim unit-weight sources at +-1/2 on each axis.

    Source i (0-based, i < dim) carries +1/2 in axis i; source dim+i
    carries -1/2 in axis i. The field value at the origin is exactly 8*dim.
    """
    d = int(dim)
    if d < 1:
        raise DimensionMismatch(f"dimension must be >= 1, got {dim}")
    src = np.zeros((2 * d, d))
    for i in range(d):
        src[i, i] = 0.5
        src[d + i, i] = -0.5
    return SourceSet(dimension=d, sources=src, weights=np.ones(2 * d))


def _check_radius(r):
    r = float(r)
    if not np.isfinite(r) or r < 0.0 or r >= MAX_RADIUS:
        raise DeltaOutOfRange(f"offset radius must lie in [0, 0.5), got {r}")
    return r


def symmetric_value(dim: int, delta):
    """Field value of the cross-polytope configuration at offset ``delta``.

    Uses the symmetric closed form: with r^2 the squared offset norm and
    A = 1/4 + r^2, the value is sum_i (1/2 + 2 r^2) / (A^2 - delta_i^2).
    Accepts a single offset of shape (dim,) or a batch of shape (m, dim);
    every offset must satisfy |delta| < 1/2.
    """
    d = int(dim)
    if d < 1:
        raise DimensionMismatch(f"dimension must be >= 1, got {dim}")
    arr = np.asarray(delta, dtype=np.float64)
    single = arr.ndim == 1
    if single:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[1] != d:
        raise DimensionMismatch(
            f"delta must have shape (m, {d}) or ({d},), got {np.shape(delta)}"
        )
    r2 = np.einsum("ij,ij->i", arr, arr)
    if np.any(r2 >= MAX_RADIUS * MAX_RADIUS):
        raise DeltaOutOfRange(
            f"offset norm must be < 0.5, got {np.sqrt(np.max(r2)):.6g}"
        )
    a = 0.25 + r2
    vals = ((0.5 + 2.0 * r2)[:, None] / (a[:, None] ** 2 - arr**2)).sum(axis=1)
    return float(vals[0]) if single else vals


def _shared_numerator(dim, x):
    # D/8 + (D+2) x + 2D x^2 in Horner form, x = r^2
    return dim / 8.0 + x * ((dim + 2.0) + x * (2.0 * dim))


def upper_bound(dim: int, r: float) -> float:
    """Upper bound on the symmetric value over all offsets of norm ``r``."""
    r = _check_radius(r)
    x = r * r
    a = 0.25 + x
    return a * _shared_numerator(dim, x) / (a**4 - x * x)


def lower_bound(dim: int, r: float) -> float:
    """Lower bound on the symmetric value over all offsets of norm ``r``."""
    r = _check_radius(r)
    x = r * r
    a = 0.25 + x
    return _shared_numerator(dim, x) / a**3


def upper_gap_numerator(dim: int, r: float) -> float:
    """Numerator of upper_bound(dim, r) - 8*dim over its positive denominator.

    Equals -8D r^8 - 6D r^6 + ((13D+4)/2) r^4 + ((4-D)/8) r^2, evaluated in
    Horner form in x = r^2. Negative values certify that every offset of
    norm r decreases the field below the center value.
    """
    x = float(r) ** 2
    d = float(dim)
    return x * ((4.0 - d) / 8.0 + x * ((13.0 * d + 4.0) / 2.0 + x * (-6.0 * d + x * (-8.0 * d))))


def lower_gap_numerator(dim: int, r: float) -> float:
    """Numerator of lower_bound(dim, r) - 8*dim over its positive denominator.

    Equals -8D r^6 - 4D r^4 + ((4-D)/2) r^2 in Horner form. Positive values
    certify that every offset of norm r increases the field above the
    center value.
    """
    x = float(r) ** 2
    d = float(dim)
    return x * ((4.0 - d) / 2.0 + x * (-4.0 * d + x * (-8.0 * d)))
