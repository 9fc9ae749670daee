"""Independent oracles and randomized probes.

Finite differences check the analytic gradient and Laplacian; sampling
probes pit interior field values against boundary-search extrema and the
symmetric closed form against its bounds. Probes never raise on a
violation: every run returns a ProbeReport carrying the trial count, the
failure count and the worst observed margin, so tolerance tightness stays
auditable. All probes are deterministic for a fixed seed.
"""

import json
from dataclasses import dataclass

import numpy as np

from .counterexample import (
    cross_polytope_sources,
    lower_bound,
    symmetric_value,
    upper_bound,
)
from .field import SourceSet, evaluate, evaluate_many, gradient, laplacian
from .regions import Sphere
from .search import SearchOptions, find_boundary_extremum

#: Default finite-difference steps. First differences use the h^(1/3)
#: sweet spot; second differences need a larger step before float noise
#: in the stencil sum swamps the h^2 truncation error.
FD_GRADIENT_STEP = 1e-5
FD_LAPLACIAN_STEP = 5e-4


def fd_gradient(sources: SourceSet, x, h: float = FD_GRADIENT_STEP):
    """Central-difference gradient (J(x+h e_k) - J(x-h e_k)) / 2h per axis."""
    p = np.asarray(x, dtype=np.float64)
    dim = sources.dimension
    stencil = np.repeat(p[None, :], 2 * dim, axis=0)
    for k in range(dim):
        stencil[2 * k, k] += h
        stencil[2 * k + 1, k] -= h
    vals = evaluate_many(sources, stencil)
    return (vals[0::2] - vals[1::2]) / (2.0 * h)


def fd_laplacian(sources: SourceSet, x, h: float = FD_LAPLACIAN_STEP) -> float:
    """Sum of second central differences (J(x+h e_k) - 2J(x) + J(x-h e_k)) / h^2."""
    p = np.asarray(x, dtype=np.float64)
    dim = sources.dimension
    stencil = np.repeat(p[None, :], 2 * dim, axis=0)
    for k in range(dim):
        stencil[2 * k, k] += h
        stencil[2 * k + 1, k] -= h
    vals = evaluate_many(sources, stencil)
    center = evaluate(sources, p)
    return float(np.sum(vals[0::2] + vals[1::2] - 2.0 * center) / (h * h))


@dataclass(frozen=True)
class ProbeReport:
    """Outcome of one probe run; failures == 0 means the probe passed."""

    name: str
    trials: int
    failures: int
    worst_violation: float
    seed: int
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"probe={self.name} trials={self.trials} failures={self.failures} "
            f"worst={self.worst_violation:.6e} tol={self.tolerance:.1e} "
            f"seed={self.seed} {status}"
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "failures": self.failures,
            "worst_violation": self.worst_violation,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def reports_to_text(reports) -> str:
    return "\n".join(r.to_text() for r in reports)


def write_reports(path, reports):
    """Machine-readable dump consumed by the test suite."""
    with open(path, "w") as fh:
        json.dump({"reports": [r.to_dict() for r in reports]}, fh, indent=2)
        fh.write("\n")


# ---------------------------------------------------------------------------
# random configurations


def _unit_rows(rng, n, dim):
    v = rng.standard_normal((n, dim))
    nrm = np.linalg.norm(v, axis=1)
    nrm[nrm == 0.0] = 1.0
    return v / nrm[:, None]


def random_config(rng, dim, shell=(1.5, 3.0), n_sources=(2, 6), weights=(0.5, 2.0)):
    """Random sphere region with sources on a shell strictly outside it.

    The shell multipliers keep every source at least shell[0] region radii
    from the center, guaranteeing the source-separation precondition with
    margin.
    """
    center = rng.uniform(-1.0, 1.0, dim)
    radius = float(rng.uniform(0.5, 1.5))
    n = int(rng.integers(n_sources[0], n_sources[1] + 1))
    dirs = _unit_rows(rng, n, dim)
    dist = radius * rng.uniform(shell[0], shell[1], n)
    src = center[None, :] + dirs * dist[:, None]
    w = rng.uniform(weights[0], weights[1], n)
    return SourceSet(dimension=dim, sources=src, weights=w), Sphere(center, radius)


def _ball_samples(rng, region, n):
    dirs = _unit_rows(rng, n, region.dim)
    radii = region.radius * rng.random(n) ** (1.0 / region.dim)
    return region.center[None, :] + dirs * radii[:, None]


# ---------------------------------------------------------------------------
# probes


def extremum_principle_probe(
    dim: int,
    objective: str,
    n_configs: int = 50,
    n_samples: int = 500,
    seed: int = 0,
    tolerance: float = 1e-9,
    starts: int | None = None,
) -> ProbeReport:
    """Interior samples must not beat the boundary-search extremum.

    Valid for maxima in dim <= 4 and minima in dim >= 4, where the
    extremum is guaranteed to sit on the boundary. Every violating sample
    counts as one failure; the worst margin (interior minus boundary,
    signed toward the objective) is reported even when negative.
    """
    obj = "max" if str(objective).lower() in ("max", "maximum") else "min"
    if obj == "max" and dim > 4:
        raise ValueError("maximum principle probe requires dim <= 4")
    if obj == "min" and dim < 4:
        raise ValueError("minimum principle probe requires dim >= 4")
    sign = 1.0 if obj == "max" else -1.0
    rng = np.random.default_rng(seed)
    # Light search: the per-source boundary projections already seed every
    # mode, and sample margins are orders of magnitude above the value
    # accuracy a capped walk delivers.
    opts = SearchOptions(seed=seed, starts=6 if starts is None else starts,
                         max_iters=120)
    failures = 0
    worst = -np.inf
    for _ in range(n_configs):
        sources, region = random_config(rng, dim)
        res = find_boundary_extremum(sources, region, obj, opts)
        samples = _ball_samples(rng, region, n_samples)
        vals = evaluate_many(sources, samples)
        margins = sign * (vals - res.value)
        failures += int(np.sum(margins > tolerance))
        worst = max(worst, float(np.max(margins)))
    return ProbeReport(
        name=f"extremum-principle[{obj},D={dim}]",
        trials=n_configs * n_samples,
        failures=failures,
        worst_violation=worst,
        seed=seed,
        tolerance=tolerance,
    )


def counterexample_interior_probe(
    dim: int,
    radius: float,
    n_samples: int = 500,
    seed: int = 0,
    tolerance: float = 1e-9,
) -> ProbeReport:
    """Run the same comparison on the cross-polytope configuration.

    For dim >= 5 (objective max) with radius below the assured-decrease
    radius, the origin beats every boundary point, so the probe MUST report
    failures: a nonzero count here demonstrates that the boundary
    restriction is invalid in that regime. Likewise for dim <= 3 minima.
    The origin is always included among the interior samples.
    """
    if dim == 4:
        raise ValueError("dimension 4 has no interior-extremum regime")
    obj = "max" if dim >= 5 else "min"
    sign = 1.0 if obj == "max" else -1.0
    sources = cross_polytope_sources(dim)
    region = Sphere(np.zeros(dim), float(radius))
    rng = np.random.default_rng(seed)
    res = find_boundary_extremum(sources, region, obj, SearchOptions(seed=seed))
    samples = np.vstack([np.zeros((1, dim)), _ball_samples(rng, region, n_samples - 1)])
    vals = evaluate_many(sources, samples)
    margins = sign * (vals - res.value)
    return ProbeReport(
        name=f"counterexample-interior[{obj},D={dim},r={radius:g}]",
        trials=n_samples,
        failures=int(np.sum(margins > tolerance)),
        worst_violation=float(np.max(margins)),
        seed=seed,
        tolerance=tolerance,
    )


def bound_sandwich_probe(
    dim: int,
    r_grid,
    n_dirs: int = 200,
    seed: int = 0,
    tolerance: float = 1e-10,
) -> ProbeReport:
    """lower_bound <= symmetric value <= upper_bound on sampled directions."""
    rng = np.random.default_rng(seed)
    failures = 0
    worst = -np.inf
    trials = 0
    for r in r_grid:
        r = float(r)
        lb = lower_bound(dim, r)
        ub = upper_bound(dim, r)
        if r == 0.0:
            deltas = np.zeros((1, dim))
        else:
            deltas = r * _unit_rows(rng, n_dirs, dim)
        vals = symmetric_value(dim, deltas)
        viol = np.maximum(lb - vals, vals - ub)
        failures += int(np.sum(viol > tolerance))
        worst = max(worst, float(np.max(viol)))
        trials += deltas.shape[0]
    return ProbeReport(
        name=f"bound-sandwich[D={dim}]",
        trials=trials,
        failures=failures,
        worst_violation=worst,
        seed=seed,
        tolerance=tolerance,
    )


def _derivative_eval_points(rng, dim):
    """A config plus a probe point at least one region radius from all sources."""
    sources, region = random_config(rng, dim)
    x = region.center + 0.5 * region.radius * _unit_rows(rng, 1, dim)[0] * rng.random()
    return sources, x


def gradient_probe(
    dim: int,
    n_configs: int = 100,
    seed: int = 0,
    tolerance: float = 1e-6,
    h: float = FD_GRADIENT_STEP,
) -> ProbeReport:
    """Analytic gradient vs central differences, per component.

    The per-component denominator is floored at 1e-3 of the largest
    component so near-cancelling components do not divide by ~0.
    """
    rng = np.random.default_rng(seed)
    failures = 0
    worst = -np.inf
    for _ in range(n_configs):
        sources, x = _derivative_eval_points(rng, dim)
        g = gradient(sources, x)
        fd = fd_gradient(sources, x, h)
        denom = np.maximum(np.abs(g), 1e-3 * max(np.max(np.abs(g)), 1e-300))
        err = float(np.max(np.abs(fd - g) / denom))
        if err > tolerance:
            failures += 1
        worst = max(worst, err)
    return ProbeReport(
        name=f"gradient-fd[D={dim}]",
        trials=n_configs,
        failures=failures,
        worst_violation=worst,
        seed=seed,
        tolerance=tolerance,
    )


def laplacian_probe(
    dim: int,
    n_configs: int = 100,
    seed: int = 0,
    tolerance: float = 1e-4,
    abs_tolerance: float = 1e-3,
    h: float = FD_LAPLACIAN_STEP,
) -> ProbeReport:
    """Closed-form Laplacian vs second central differences.

    Relative comparison away from dimension four; at dimension four the
    closed form is exactly zero, so the stencil value itself must stay
    below ``abs_tolerance``.
    """
    rng = np.random.default_rng(seed)
    failures = 0
    worst = -np.inf
    tol = abs_tolerance if dim == 4 else tolerance
    for _ in range(n_configs):
        sources, x = _derivative_eval_points(rng, dim)
        closed = laplacian(sources, x)
        fd = fd_laplacian(sources, x, h)
        if dim == 4:
            if closed != 0.0:
                failures += 1
                worst = max(worst, abs(closed))
                continue
            err = abs(fd)
        else:
            err = abs(fd - closed) / abs(closed)
        if err > tol:
            failures += 1
        worst = max(worst, err)
    return ProbeReport(
        name=f"laplacian-fd[D={dim}]",
        trials=n_configs,
        failures=failures,
        worst_violation=worst,
        seed=seed,
        tolerance=tol,
    )
