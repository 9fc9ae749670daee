"""Global extremum search over a closed region, boundary-restricted when the
harmonicity class guarantees the extremum sits there.

For a maximum in dimension <= 4 or a minimum in dimension >= 4 the search
runs only on the region boundary, cutting the problem dimension by one.
Outside those regimes the extremum may be interior, so an interior
multi-start pass runs alongside the boundary pass and the better result
wins. Local refinement is projected gradient ascent/descent with a
backtracking line search; starts come from a seeded additive-recurrence
spread plus deterministic seeds at the region center and at the boundary
points nearest each source.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    CoincidentSource,
    DimensionMismatch,
    SourceInsideRegion,
)
from .field import DEFAULT_EXCLUSION, SourceSet
from .regions import Box, Sphere

#: Sources must clear the region by at least this much.
SOURCE_MARGIN = 1e-9

#: A result point closer than this to the boundary is tagged "boundary".
BOUNDARY_TOL = 1e-7


@dataclass(frozen=True)
class SearchOptions:
    """Knobs for find_extremum. Identical options and seed give identical
    results."""

    seed: int = 0
    starts: int | None = None  # default max(8, 4 * dim)
    max_iters: int = 500
    gradient_tolerance: float = 1e-10
    step_tolerance: float = 1e-12
    initial_step_fraction: float = 0.1


@dataclass(frozen=True)
class ExtremumResult:
    """Best point found, with search diagnostics.

    ``location`` is "boundary" when the point sits within BOUNDARY_TOL of
    the region boundary, else "interior". ``restricted`` records whether
    the search was limited to the boundary by the harmonicity guarantee.
    ``converged`` means the winning walk met the gradient tolerance (a
    stalled line search reports False while still returning its best
    point). ``grad_norm`` is the feasibility-projected gradient norm at the
    returned point.
    """

    point: np.ndarray
    value: float
    location: str
    objective: str
    restricted: bool
    starts_used: int
    converged: bool
    grad_norm: float
    iterations: int


def search_plan(dim: int, objective: str) -> str:
    """Return "boundary" when the extremum is guaranteed on the boundary,
    else "full".

    Maxima are boundary-only for dim <= 4, minima for dim >= 4; dimension
    four pins both to the boundary.
    """
    d = int(dim)
    if d < 1:
        raise DimensionMismatch(f"dimension must be >= 1, got {dim}")
    obj = _canon_objective(objective)
    if obj == "max":
        return "boundary" if d <= 4 else "full"
    return "boundary" if d >= 4 else "full"


def _canon_objective(objective):
    obj = str(objective).lower()
    if obj in ("max", "maximum"):
        return "max"
    if obj in ("min", "minimum"):
        return "min"
    raise ValueError(f"objective must be 'max' or 'min', got {objective!r}")


def check_sources_outside(sources: SourceSet, region, margin: float = SOURCE_MARGIN):
    """Raise unless every source clears the region by more than ``margin``."""
    if region.dim != sources.dimension:
        raise DimensionMismatch(
            f"region dimension {region.dim} != source dimension {sources.dimension}"
        )
    for i in range(sources.n_sources):
        if region.exterior_distance(sources.sources[i]) <= margin:
            raise SourceInsideRegion(
                f"source {i} at {sources.sources[i].tolist()} is inside or too "
                f"close to the region (margin {margin:g})"
            )


# ---------------------------------------------------------------------------
# start generation: additive-recurrence (Kronecker) spread


def _first_primes(k):
    primes = []
    cand = 2
    while len(primes) < k:
        if all(cand % p for p in primes):
            primes.append(cand)
        cand += 1
    return primes


def _kronecker(n, dim, seed):
    """n points in [0,1)^dim: seeded shift plus irrational increments."""
    alpha = np.sqrt(np.array(_first_primes(dim), dtype=np.float64)) % 1.0
    shift = np.random.default_rng(seed).random(dim)
    idx = np.arange(1, n + 1, dtype=np.float64)
    return (shift[None, :] + idx[:, None] * alpha[None, :]) % 1.0


def _unit_directions(n, dim, seed):
    """Well-spread unit vectors: Box-Muller over a Kronecker sequence."""
    cols = 2 * ((dim + 1) // 2)
    u = _kronecker(n, cols, seed)
    u = np.clip(u, 1e-12, 1.0 - 1e-12)
    radial = np.sqrt(-2.0 * np.log(u[:, 0::2]))
    angle = 2.0 * np.pi * u[:, 1::2]
    z = np.empty((n, cols))
    z[:, 0::2] = radial * np.cos(angle)
    z[:, 1::2] = radial * np.sin(angle)
    z = z[:, :dim]
    nrm = np.linalg.norm(z, axis=1)
    nrm[nrm == 0.0] = 1.0
    return z / nrm[:, None]


# ---------------------------------------------------------------------------
# single-point field closures (kernel calls without per-call validation)


def _point_funcs(sources: SourceSet):
    src = sources.sources
    w = sources.weights
    buf = np.empty((1, sources.dimension))

    def f_val(p):
        buf[0] = p
        vals, min_sq = kernels.field_values(buf, src, w)
        if min_sq[0] < DEFAULT_EXCLUSION:
            raise CoincidentSource("search point hit a source exclusion zone")
        return float(vals[0])

    def f_grad(p):
        buf[0] = p
        grads, _ = kernels.field_gradients(buf, src, w)
        return grads[0].copy()

    return f_val, f_grad


# ---------------------------------------------------------------------------
# projected-gradient walker


def _walk(f_val, f_grad, project, proj_dir, start, sign, opts, scale, trace=None):
    """Maximize sign * field from ``start`` under a feasibility projection.

    Steps follow the full gradient, then ``project`` restores feasibility;
    ``proj_dir`` maps the signed gradient to the feasible ascent direction
    used for the stationarity test. Returns (point, value, projected grad
    norm, iterations, converged).
    """
    p = project(np.asarray(start, dtype=np.float64))
    v = f_val(p)
    if trace is not None:
        trace.append(p.copy())
    step_cap = opts.initial_step_fraction * scale
    step = step_cap
    it = 0
    for it in range(1, opts.max_iters + 1):
        g = f_grad(p)
        d = proj_dir(p, sign * g)
        dn = math.sqrt(float(d @ d))
        if dn < opts.gradient_tolerance:
            return p, v, dn, it, True
        gn = math.sqrt(float(g @ g))
        u = (sign / gn) * g
        accepted = False
        while step >= opts.step_tolerance:
            q = project(p + step * u)
            vq = f_val(q)
            if sign * (vq - v) > 0.0:
                p, v = q, vq
                if trace is not None:
                    trace.append(p.copy())
                accepted = True
                break
            step *= 0.5
        if not accepted:
            return p, v, dn, it, False
        step = min(2.0 * step, step_cap)
    g = f_grad(p)
    d = proj_dir(p, sign * g)
    return p, v, math.sqrt(float(d @ d)), it, False


def _sphere_projector(region: Sphere):
    def project(q):
        return region.project_boundary(q)

    def proj_dir(p, d):
        # tangential component on the sphere
        n = (p - region.center) / region.radius
        return d - float(d @ n) * n

    return project, proj_dir


def _ball_projector(region: Sphere):
    def project(q):
        return region.clip_inside(q)

    def proj_dir(p, d):
        off = p - region.center
        nrm = float(np.linalg.norm(off))
        if nrm < region.radius * (1.0 - 1e-12):
            return d
        n = off / nrm
        outward = float(d @ n)
        if outward > 0.0:
            return d - outward * n
        return d

    return project, proj_dir


def _box_projector(region: Box, pin_axis=None, pin_value=None):
    lo = region.lower
    hi = region.upper

    def project(q):
        q = np.clip(q, lo, hi)
        if pin_axis is not None:
            q[pin_axis] = pin_value
        return q

    def proj_dir(p, d):
        d = d.copy()
        at_lo = p <= lo + 1e-14 * np.maximum(1.0, np.abs(lo))
        at_hi = p >= hi - 1e-14 * np.maximum(1.0, np.abs(hi))
        d[at_lo & (d < 0.0)] = 0.0
        d[at_hi & (d > 0.0)] = 0.0
        if pin_axis is not None:
            d[pin_axis] = 0.0
        return d

    return project, proj_dir


# ---------------------------------------------------------------------------
# start sets per search surface


def _boundary_starts_sphere(sources, region, n, seed):
    dim = region.dim
    starts = [region.center + region.radius * d for d in _unit_directions(n, dim, seed)]
    for s in sources.sources:
        starts.append(region.project_boundary(s))
    return starts


def _interior_starts_sphere(region, n, seed):
    dim = region.dim
    dirs = _unit_directions(n, dim, seed + 1)
    radii = region.radius * _kronecker(n, 1, seed + 2)[:, 0] ** (1.0 / dim)
    starts = [region.center.copy()]
    starts.extend(region.center + radii[:, None] * dirs)
    return starts


def _interior_starts_box(region, n, seed):
    u = _kronecker(n, region.dim, seed + 1)
    starts = [region.center]
    starts.extend(region.lower + u * (region.upper - region.lower))
    return starts


def _box_faces(region):
    for axis in range(region.dim):
        yield axis, float(region.lower[axis])
        yield axis, float(region.upper[axis])


def _face_starts(sources, region, axis, value, n, seed):
    free = [k for k in range(region.dim) if k != axis]
    center = region.center.copy()
    center[axis] = value
    starts = [center]
    if free:
        u = _kronecker(n, len(free), seed)
        for row in u:
            p = region.center.copy()
            p[axis] = value
            p[free] = region.lower[free] + row * (region.upper[free] - region.lower[free])
            starts.append(p)
    for s in sources.sources:
        p = np.clip(s, region.lower, region.upper)
        p[axis] = value
        starts.append(p)
    return starts


# ---------------------------------------------------------------------------
# passes


def _lex_less(a, b):
    for x, y in zip(a, b):
        if x < y:
            return True
        if x > y:
            return False
    return False


class _Best:
    """Deterministic reduction over candidate walks."""

    def __init__(self, sign):
        self.sign = sign
        self.point = None
        self.value = None
        self.grad_norm = math.inf
        self.iterations = 0
        self.converged = False
        self.count = 0

    def offer(self, point, value, grad_norm, iters, converged):
        self.count += 1
        take = False
        if self.point is None or self.sign * (value - self.value) > 0.0:
            take = True
        elif value == self.value and _lex_less(point, self.point):
            take = True
        if take:
            self.point = np.asarray(point, dtype=np.float64).copy()
            self.value = float(value)
            self.grad_norm = float(grad_norm)
            self.iterations = int(iters)
            self.converged = bool(converged)


def _boundary_pass(sources, region, sign, n_starts, opts, best, trace=None):
    f_val, f_grad = _point_funcs(sources)
    dim = region.dim
    if isinstance(region, Sphere):
        if dim == 1:
            for p in (region.center - region.radius, region.center + region.radius):
                p = np.asarray(p, dtype=np.float64)
                best.offer(p, f_val(p), 0.0, 0, True)
            return
        project, proj_dir = _sphere_projector(region)
        for i, start in enumerate(
            _boundary_starts_sphere(sources, region, n_starts, opts.seed)
        ):
            tr = trace if i == 0 else None
            best.offer(*_walk(f_val, f_grad, project, proj_dir, start, sign, opts,
                              region.scale, trace=tr))
        return
    if dim == 1:
        for p in (region.lower, region.upper):
            p = np.asarray(p, dtype=np.float64)
            best.offer(p, f_val(p), 0.0, 0, True)
        return
    per_face = max(4, -(-n_starts // (2 * dim)))
    for fi, (axis, value) in enumerate(_box_faces(region)):
        project, proj_dir = _box_projector(region, pin_axis=axis, pin_value=value)
        face_seed = opts.seed + 7919 * (fi + 1)
        for start in _face_starts(sources, region, axis, value, per_face, face_seed):
            best.offer(*_walk(f_val, f_grad, project, proj_dir, start, sign, opts,
                              region.scale))


def _interior_pass(sources, region, sign, n_starts, opts, best):
    f_val, f_grad = _point_funcs(sources)
    if isinstance(region, Sphere):
        project, proj_dir = _ball_projector(region)
        starts = _interior_starts_sphere(region, n_starts, opts.seed)
    else:
        project, proj_dir = _box_projector(region)
        starts = _interior_starts_box(region, n_starts, opts.seed)
    for start in starts:
        best.offer(*_walk(f_val, f_grad, project, proj_dir, start, sign, opts,
                          region.scale))


def find_extremum(
    sources: SourceSet,
    region,
    objective: str,
    opts: SearchOptions | None = None,
    _boundary_trace=None,
) -> ExtremumResult:
    """Best maximum or minimum of the field over the region.

    Applies the boundary restriction whenever search_plan allows it;
    otherwise both an interior multi-start pass and the boundary pass run
    and the better candidate is returned. Deterministic for fixed options.
    Raises SourceInsideRegion / DimensionMismatch on invalid geometry; a
    walk that stalls before meeting the gradient tolerance is reported via
    ``converged=False``, not an error.
    """
    opts = opts or SearchOptions()
    obj = _canon_objective(objective)
    check_sources_outside(sources, region)
    dim = region.dim
    sign = 1.0 if obj == "max" else -1.0
    plan = search_plan(dim, obj)
    n_starts = opts.starts if opts.starts is not None else max(8, 4 * dim)

    best = _Best(sign)
    _boundary_pass(sources, region, sign, n_starts, opts, best, trace=_boundary_trace)
    if plan == "full":
        _interior_pass(sources, region, sign, n_starts, opts, best)

    location = "boundary" if region.boundary_distance(best.point) < BOUNDARY_TOL else "interior"
    return ExtremumResult(
        point=best.point,
        value=best.value,
        location=location,
        objective=obj,
        restricted=(plan == "boundary"),
        starts_used=best.count,
        converged=best.converged and best.grad_norm < opts.gradient_tolerance,
        grad_norm=best.grad_norm,
        iterations=best.iterations,
    )


def find_boundary_extremum(
    sources: SourceSet,
    region,
    objective: str,
    opts: SearchOptions | None = None,
) -> ExtremumResult:
    """Best extremum over the region boundary only, regardless of plan.

    Used by verification probes that compare interior samples against the
    boundary extremum even in regimes where the interior may win.
    """
    opts = opts or SearchOptions()
    obj = _canon_objective(objective)
    check_sources_outside(sources, region)
    sign = 1.0 if obj == "max" else -1.0
    n_starts = opts.starts if opts.starts is not None else max(8, 4 * region.dim)
    best = _Best(sign)
    _boundary_pass(sources, region, sign, n_starts, opts, best)
    return ExtremumResult(
        point=best.point,
        value=best.value,
        location="boundary",
        objective=obj,
        restricted=True,
        starts_used=best.count,
        converged=best.converged and best.grad_norm < opts.gradient_tolerance,
        grad_norm=best.grad_norm,
        iterations=best.iterations,
    )


def format_result(result: ExtremumResult) -> str:
    """Stable line-oriented rendering used by the CLI and reports."""
    coords = ",".join(f"{c:.12g}" for c in result.point)
    return (
        f"objective: {result.objective}\n"
        f"restricted: {'true' if result.restricted else 'false'}\n"
        f"point: {coords}\n"
        f"value: {result.value:.12g}\n"
        f"location: {result.location}\n"
        f"converged: {'true' if result.converged else 'false'}\n"
        f"grad_norm: {result.grad_norm:.3e}\n"
        f"starts: {result.starts_used}"
    )
