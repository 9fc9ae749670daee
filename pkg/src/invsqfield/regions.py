"""Closed search regions: spheres and axis-aligned boxes.

Both shapes expose the same small surface the search code needs: dimension,
membership, signed exterior distance, distance to the boundary, a
characteristic scale, and feasibility projections.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch


@dataclass(frozen=True)
class Sphere:
    """Closed ball given by center and radius; boundary is the sphere."""

    center: np.ndarray
    radius: float

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.center, dtype=np.float64)).copy()
        r = float(self.radius)
        if c.ndim != 1 or c.size < 1 or not np.all(np.isfinite(c)):
            raise DimensionMismatch("sphere center must be a finite 1-D vector")
        if not np.isfinite(r) or r <= 0.0:
            raise DimensionMismatch(f"sphere radius must be positive, got {self.radius}")
        c.flags.writeable = False
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "radius", r)

    @property
    def dim(self) -> int:
        return self.center.size

    @property
    def scale(self) -> float:
        return self.radius

    def contains(self, points) -> np.ndarray:
        pts = np.atleast_2d(points)
        d = pts - self.center[None, :]
        return np.einsum("ij,ij->i", d, d) <= self.radius * self.radius

    def exterior_distance(self, point) -> float:
        """Signed distance: positive outside, negative inside."""
        return float(np.linalg.norm(np.asarray(point, float) - self.center)) - self.radius

    def boundary_distance(self, point) -> float:
        return abs(self.exterior_distance(point))

    def project_boundary(self, point) -> np.ndarray:
        d = np.asarray(point, dtype=np.float64) - self.center
        nrm = np.linalg.norm(d)
        if nrm == 0.0:
            d = np.zeros(self.dim)
            d[0] = 1.0
            nrm = 1.0
        return self.center + self.radius * (d / nrm)

    def clip_inside(self, point) -> np.ndarray:
        p = np.asarray(point, dtype=np.float64)
        d = p - self.center
        nrm = np.linalg.norm(d)
        if nrm > self.radius:
            return self.center + self.radius * (d / nrm)
        return p.copy()


@dataclass(frozen=True)
class Box:
    """Axis-aligned closed box; boundary is the union of its 2*dim faces."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lo = np.atleast_1d(np.asarray(self.lower, dtype=np.float64)).copy()
        hi = np.atleast_1d(np.asarray(self.upper, dtype=np.float64)).copy()
        if lo.shape != hi.shape or lo.ndim != 1 or lo.size < 1:
            raise DimensionMismatch("box bounds must be 1-D vectors of equal length")
        if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
            raise DimensionMismatch("box bounds must be finite")
        if not np.all(lo < hi):
            raise DimensionMismatch("box lower bound must be strictly below upper bound")
        lo.flags.writeable = False
        hi.flags.writeable = False
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def dim(self) -> int:
        return self.lower.size

    @property
    def scale(self) -> float:
        return float(np.max(self.upper - self.lower)) / 2.0

    @property
    def center(self) -> np.ndarray:
        return 0.5 * (self.lower + self.upper)

    def contains(self, points) -> np.ndarray:
        pts = np.atleast_2d(points)
        return np.all((pts >= self.lower[None, :]) & (pts <= self.upper[None, :]), axis=1)

    def exterior_distance(self, point) -> float:
        """Euclidean distance to the box when outside, minus the smallest
        margin to a face when inside."""
        p = np.asarray(point, dtype=np.float64)
        out = np.maximum(np.maximum(self.lower - p, p - self.upper), 0.0)
        d = float(np.linalg.norm(out))
        if d > 0.0:
            return d
        return -float(np.min(np.minimum(p - self.lower, self.upper - p)))

    def boundary_distance(self, point) -> float:
        return abs(self.exterior_distance(point))

    def clip_inside(self, point) -> np.ndarray:
        return np.clip(np.asarray(point, dtype=np.float64), self.lower, self.upper)
