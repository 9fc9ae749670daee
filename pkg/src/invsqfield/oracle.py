"""Exhaustive grid oracle for extremum search, independent of the
gradient-based path.

The region interior is swept on a regular grid and the boundary on its own
parameter grids (box faces in face coordinates, spheres in hyperspherical
angles). The best few well-separated cells are then re-gridded through a
fixed number of shrinking windows, which pins the extremum down to far
below the coarse cell size while staying purely evaluation-based: no
gradients, no line searches, nothing shared with find_extremum beyond the
field itself.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DimensionTooLarge
from .field import SourceSet, evaluate_many, gradient
from .regions import Box, Sphere
from .search import (
    BOUNDARY_TOL,
    ExtremumResult,
    _canon_objective,
    check_sources_outside,
)

#: Refined candidates kept from the coarse sweep.
_TOP_K = 8
#: Refined candidates per chart before the global merge.
_PER_CHART = 4
#: Zoom window half-width in coarse cells.
_WINDOW = 1.5


@dataclass
class _Chart:
    """One parameter patch: a box in parameter space mapped onto the region."""

    name: str
    lower: np.ndarray
    upper: np.ndarray
    periodic: np.ndarray
    counts: np.ndarray
    endpoint: np.ndarray
    to_points: Callable
    feasible: Optional[Callable] = None


def _grid(axes):
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1)


def _chart_axes(chart):
    axes = []
    for a in range(chart.lower.size):
        axes.append(
            np.linspace(
                chart.lower[a],
                chart.upper[a],
                int(chart.counts[a]),
                endpoint=bool(chart.endpoint[a]),
            )
        )
    return axes


def _sphere_surface_chart(region: Sphere, resolution):
    dim = region.dim
    k = dim - 1
    lower = np.zeros(k)
    upper = np.full(k, np.pi)
    upper[-1] = 2.0 * np.pi
    periodic = np.zeros(k, dtype=bool)
    periodic[-1] = True
    counts = np.full(k, resolution)
    counts[-1] = 2 * resolution
    endpoint = np.ones(k, dtype=bool)
    endpoint[-1] = False

    def to_points(params):
        m = params.shape[0]
        unit = np.empty((m, dim))
        sin_prod = np.ones(m)
        for j in range(k):
            unit[:, j] = sin_prod * np.cos(params[:, j])
            sin_prod = sin_prod * np.sin(params[:, j])
        unit[:, dim - 1] = sin_prod
        return region.center[None, :] + region.radius * unit

    return _Chart("sphere-surface", lower, upper, periodic, counts, endpoint, to_points)


def _box_face_chart(region: Box, axis, value, resolution):
    free = [k for k in range(region.dim) if k != axis]
    lower = region.lower[free].copy()
    upper = region.upper[free].copy()
    k = len(free)

    def to_points(params):
        pts = np.empty((params.shape[0], region.dim))
        pts[:, free] = params
        pts[:, axis] = value
        return pts

    return _Chart(
        f"box-face-{axis}-{value:g}",
        lower,
        upper,
        np.zeros(k, dtype=bool),
        np.full(k, resolution),
        np.ones(k, dtype=bool),
        to_points,
    )


def _interior_chart(region, resolution):
    if isinstance(region, Box):
        lower, upper = region.lower.copy(), region.upper.copy()
        feasible = None
    else:
        lower = region.center - region.radius
        upper = region.center + region.radius
        feasible = region.contains
    dim = lower.size
    return _Chart(
        "interior",
        lower,
        upper,
        np.zeros(dim, dtype=bool),
        np.full(dim, resolution),
        np.ones(dim, dtype=bool),
        lambda params: params,
        feasible=feasible,
    )


@dataclass
class _Candidate:
    chart: _Chart
    params: np.ndarray
    point: np.ndarray
    value: float
    cells: np.ndarray


def _chart_candidates(sources, chart, sign, exclusion):
    axes = _chart_axes(chart)
    params = _grid(axes)
    pts = chart.to_points(params)
    if chart.feasible is not None:
        mask = chart.feasible(pts)
        params = params[mask]
        pts = pts[mask]
    if pts.shape[0] == 0:
        return []
    values = evaluate_many(sources, pts, exclusion)
    cells = np.array(
        [ax[1] - ax[0] if ax.size > 1 else chart.upper[i] - chart.lower[i]
         for i, ax in enumerate(axes)]
    )
    order = np.argsort(sign * values, kind="stable")[::-1]
    picked = []
    for idx in order[: max(512, _PER_CHART * 8)]:
        p = params[idx]
        if any(np.all(np.abs(p - c.params) < 2.0 * cells) for c in picked):
            continue
        picked.append(
            _Candidate(chart, p.copy(), pts[idx].copy(), float(values[idx]), cells.copy())
        )
        if len(picked) >= _PER_CHART:
            break
    return picked


def _refine(sources, cand, resolution, levels, sign, exclusion):
    chart = cand.chart
    params = cand.params.copy()
    point = cand.point.copy()
    value = cand.value
    cells = cand.cells.copy()
    for _ in range(levels):
        lo = params - _WINDOW * cells
        hi = params + _WINDOW * cells
        free = ~chart.periodic
        lo[free] = np.maximum(lo[free], chart.lower[free])
        hi[free] = np.minimum(hi[free], chart.upper[free])
        axes = [np.linspace(lo[a], hi[a], resolution) for a in range(lo.size)]
        grid = _grid(axes)
        pts = chart.to_points(grid)
        if chart.feasible is not None:
            mask = chart.feasible(pts)
            grid = grid[mask]
            pts = pts[mask]
        if pts.shape[0] == 0:
            break
        values = evaluate_many(sources, pts, exclusion)
        idx = int(np.argmax(sign * values))
        if sign * (values[idx] - value) > 0.0:
            value = float(values[idx])
            params = grid[idx].copy()
            point = pts[idx].copy()
        cells = (hi - lo) / (resolution - 1)
    return point, value


def brute_force_oracle(
    sources: SourceSet,
    region,
    objective: str,
    resolution: int,
    refine_levels: int = 4,
    exclusion: float = 1e-12,
) -> ExtremumResult:
    """Grid-sweep extremum over the region (interior grid plus boundary
    grids), refined by shrinking-window re-gridding around the best cells.

    ``resolution`` is the point count per axis of every grid. Costs grow as
    resolution^dim, so dimensions above four are rejected. With
    ``refine_levels=0`` the raw coarse-grid best is returned.
    """
    obj = _canon_objective(objective)
    dim = region.dim
    if dim > 4:
        raise DimensionTooLarge(f"grid oracle supports dimension <= 4, got {dim}")
    if resolution < 3:
        raise ValueError(f"resolution must be >= 3, got {resolution}")
    check_sources_outside(sources, region)
    sign = 1.0 if obj == "max" else -1.0

    charts = [_interior_chart(region, resolution)]
    point_candidates = []
    if isinstance(region, Sphere):
        if dim == 1:
            point_candidates = [region.center - region.radius,
                                region.center + region.radius]
        else:
            charts.append(_sphere_surface_chart(region, resolution))
    else:
        if dim == 1:
            point_candidates = [region.lower.copy(), region.upper.copy()]
        else:
            for axis, value in itertools.product(range(dim), (0, 1)):
                bound = region.lower[axis] if value == 0 else region.upper[axis]
                charts.append(_box_face_chart(region, axis, float(bound), resolution))

    candidates = []
    for chart in charts:
        candidates.extend(_chart_candidates(sources, chart, sign, exclusion))
    candidates.sort(key=lambda c: (-sign * c.value, tuple(c.point)))
    candidates = candidates[:_TOP_K]

    best_point = None
    best_value = -math.inf
    for cand in candidates:
        point, value = _refine(sources, cand, resolution, refine_levels, sign, exclusion)
        if sign * value > best_value:
            best_value = sign * value
            best_point = point
    for p in point_candidates:
        p = np.asarray(p, dtype=np.float64)
        value = float(evaluate_many(sources, p[None, :], exclusion)[0])
        if sign * value > best_value:
            best_value = sign * value
            best_point = p

    value = best_value * sign
    location = "boundary" if region.boundary_distance(best_point) < BOUNDARY_TOL else "interior"
    return ExtremumResult(
        point=best_point,
        value=value,
        location=location,
        objective=obj,
        restricted=False,
        starts_used=len(candidates) + len(point_candidates),
        converged=True,
        grad_norm=float(np.linalg.norm(gradient(sources, best_point))),
        iterations=refine_levels,
    )
