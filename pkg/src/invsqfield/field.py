"""Inverse-square field of weighted point sources.

A field value is the sum over sources of weight / squared-distance. The
module provides the value, the analytic gradient, the closed-form
Laplacian, and the dimension-driven harmonicity classification, plus batch
variants that feed whole point arrays through the compiled kernels.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .errors import CoincidentSource, DimensionMismatch

#: Default squared-distance exclusion radius around each source.
DEFAULT_EXCLUSION = 1e-12


class Harmonicity(Enum):
    """Sign class of the field's Laplacian, fixed by the dimension alone."""

    SUBHARMONIC = "strictly-subharmonic"
    HARMONIC = "harmonic"
    SUPERHARMONIC = "strictly-superharmonic"


def as_point(x, dim=None):
    """Convert to a validated 1-D float64 coordinate vector.

    Raises DimensionMismatch if ``dim`` is given and does not match, or if
    any coordinate is non-finite.
    """
    p = np.asarray(x, dtype=np.float64)
    if p.ndim != 1:
        raise DimensionMismatch(f"point must be a 1-D vector, got shape {p.shape}")
    if p.size < 1:
        raise DimensionMismatch("point must have at least one coordinate")
    if not np.all(np.isfinite(p)):
        raise DimensionMismatch("point has non-finite coordinates")
    if dim is not None and p.size != dim:
        raise DimensionMismatch(f"point has {p.size} coordinates, expected {dim}")
    return p


@dataclass(frozen=True)
class SourceSet:
    """Immutable set of n point sources with positive emission weights.

    ``sources`` is an (n, dimension) array, ``weights`` an (n,) array.
    Duplicate sources are allowed; their contributions add.
    """

    dimension: int
    sources: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        dim = int(self.dimension)
        if dim < 1:
            raise DimensionMismatch(f"dimension must be >= 1, got {dim}")
        src = np.atleast_2d(np.asarray(self.sources, dtype=np.float64))
        w = np.atleast_1d(np.asarray(self.weights, dtype=np.float64))
        if src.ndim != 2 or src.shape[1] != dim:
            raise DimensionMismatch(
                f"sources must have shape (n, {dim}), got {src.shape}"
            )
        if src.shape[0] < 1:
            raise DimensionMismatch("need at least one source")
        if w.shape != (src.shape[0],):
            raise DimensionMismatch(
                f"weights must have shape ({src.shape[0]},), got {w.shape}"
            )
        if not np.all(np.isfinite(src)):
            raise DimensionMismatch("sources contain non-finite coordinates")
        if not np.all(np.isfinite(w)) or np.any(w <= 0.0):
            raise DimensionMismatch("weights must be finite and strictly positive")
        src = src.copy()
        w = w.copy()
        src.flags.writeable = False
        w.flags.writeable = False
        object.__setattr__(self, "dimension", dim)
        object.__setattr__(self, "sources", src)
        object.__setattr__(self, "weights", w)

    @property
    def n_sources(self):
        return self.sources.shape[0]


def _as_batch(sources, points):
    """Validate a (m, D) point batch against a SourceSet."""
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim == 1:
        pts = pts[None, :]
    if pts.ndim != 2 or pts.shape[1] != sources.dimension:
        raise DimensionMismatch(
            f"points must have shape (m, {sources.dimension}), got {np.shape(points)}"
        )
    if not np.all(np.isfinite(pts)):
        raise DimensionMismatch("points contain non-finite coordinates")
    return pts


def _guard(min_sq, exclusion):
    if np.any(min_sq < exclusion):
        worst = float(np.min(min_sq))
        raise CoincidentSource(
            f"point within exclusion distance of a source "
            f"(squared distance {worst:.3e} < {exclusion:.3e})"
        )


def evaluate_many(sources: SourceSet, points, exclusion: float = DEFAULT_EXCLUSION):
    """Field value at each row of ``points``; returns an (m,) array."""
    pts = _as_batch(sources, points)
    values, min_sq = kernels.field_values(pts, sources.sources, sources.weights)
    _guard(min_sq, exclusion)
    return values


def gradient_many(sources: SourceSet, points, exclusion: float = DEFAULT_EXCLUSION):
    """Analytic gradient at each row of ``points``; returns an (m, D) array."""
    pts = _as_batch(sources, points)
    grads, min_sq = kernels.field_gradients(pts, sources.sources, sources.weights)
    _guard(min_sq, exclusion)
    return grads


def laplacian_many(sources: SourceSet, points, exclusion: float = DEFAULT_EXCLUSION):
    """Closed-form Laplacian at each row of ``points``; returns an (m,) array."""
    pts = _as_batch(sources, points)
    laps, min_sq = kernels.field_laplacians(pts, sources.sources, sources.weights)
    _guard(min_sq, exclusion)
    return laps


def evaluate(sources: SourceSet, x, exclusion: float = DEFAULT_EXCLUSION) -> float:
    """Combined field value at a single point.

    Sum over sources of weight / squared-distance. Strictly positive and
    finite away from the sources. Raises CoincidentSource when the point is
    within the exclusion distance of any source, DimensionMismatch on a
    wrong-length point.
    """
    p = as_point(x, sources.dimension)
    return float(evaluate_many(sources, p[None, :], exclusion)[0])


def gradient(sources: SourceSet, x, exclusion: float = DEFAULT_EXCLUSION):
    """Analytic gradient of the field value at a single point.

    Component k is the sum over sources of -2 (x_k - s_k) w / dist^4.
    """
    p = as_point(x, sources.dimension)
    return gradient_many(sources, p[None, :], exclusion)[0]


def laplacian(sources: SourceSet, x, exclusion: float = DEFAULT_EXCLUSION) -> float:
    """Closed-form Laplacian at a single point.

    Equals (8 - 2 D) * sum of w / dist^4, so its sign matches sign(4 - D)
    everywhere valid and is exactly zero in dimension four.
    """
    p = as_point(x, sources.dimension)
    return float(laplacian_many(sources, p[None, :], exclusion)[0])


def classify(dim: int) -> Harmonicity:
    """Harmonicity class of any inverse-square source field in dimension ``dim``."""
    d = int(dim)
    if d < 1:
        raise DimensionMismatch(f"dimension must be >= 1, got {dim}")
    if d < 4:
        return Harmonicity.SUBHARMONIC
    if d == 4:
        return Harmonicity.HARMONIC
    return Harmonicity.SUPERHARMONIC
