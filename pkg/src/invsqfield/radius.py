"""Assured-decrease / assured-increase radii for the cross-polytope field.

For dim >= 5 the center of the cross-polytope configuration is a certified
interior maximum of the field over any origin-centered sphere of radius up
to the smallest positive root of a cubic in x = r^2; for dim <= 3 it is a
certified interior minimum up to a closed-form radius. Both radii are lower
bounds on the true thresholds and are strictly below 1/2, so the sources
stay outside the region.
"""

import csv
import io
import math
from dataclasses import dataclass

from .errors import UnsupportedDimension

_SCAN_STEP = 1.0 / 4096.0
_BISECT_WIDTH = 1e-14


def _cubic(dim, x):
    # Gap cubic divided by dim for float stability at very large dim:
    # -8 x^3 - 6 x^2 + ((13 + 4/dim)/2) x + (4/dim - 1)/8
    return ((-8.0 * x - 6.0) * x + (13.0 + 4.0 / dim) / 2.0) * x + (4.0 / dim - 1.0) / 8.0


def _cubic_deriv(dim, x):
    return (-24.0 * x - 12.0) * x + (13.0 + 4.0 / dim) / 2.0


def _check_max_case(dim):
    d = int(dim)
    if d <= 4:
        raise UnsupportedDimension(
            f"maximum-case radius needs dimension >= 5, got {dim}"
        )
    return d


def _check_min_case(dim):
    d = int(dim)
    if d < 1 or d >= 4:
        raise UnsupportedDimension(
            f"minimum-case radius needs dimension in 1..3, got {dim}"
        )
    return d


def max_case_radius(dim: int) -> float:
    """Certified interior-maximum radius for dim >= 5 (numeric root).

    Returns sqrt(x) for the smallest positive root x of the gap cubic
    -8D x^3 - 6D x^2 + ((13D+4)/2) x + (4-D)/8. The cubic is negative at 0
    and has positive slope there, so a coarse sign scan brackets the first
    crossing; bisection plus a Newton polish pins it down.
    """
    d = _check_max_case(dim)
    lo = 0.0
    hi = _SCAN_STEP
    while hi <= 0.25 + 1e-15 and _cubic(d, hi) <= 0.0:
        lo = hi
        hi += _SCAN_STEP
    if _cubic(d, hi) <= 0.0:
        raise UnsupportedDimension(f"no sign change found on (0, 1/4] for dim={dim}")
    while hi - lo > _BISECT_WIDTH:
        mid = 0.5 * (lo + hi)
        if _cubic(d, mid) > 0.0:
            hi = mid
        else:
            lo = mid
    x = 0.5 * (lo + hi)
    for _ in range(4):
        x -= _cubic(d, x) / _cubic_deriv(d, x)
    return math.sqrt(x)


def max_case_radius_simple(dim: int) -> float:
    """Closed-form approximation sqrt((D-4)/(52D+16)); slightly below the
    numeric root, converging to sqrt(1/52) ~ 0.1387 as D grows."""
    d = _check_max_case(dim)
    return math.sqrt((d - 4.0) / (52.0 * d + 16.0))


def max_case_radius_quadratic(dim: int) -> float:
    """Quadratic-truncation approximation of the numeric root.

    Drops only the cubic term, giving
    sqrt((13D+4 - sqrt(157 D^2 + 152 D + 16)) / (24 D)). The discriminant
    is evaluated as D * sqrt(157 + 152/D + 16/D^2) so enormous D stays
    cancellation-safe. Agrees with max_case_radius to four significant
    digits across the tabulated dimensions; the large-D limit is
    1/sqrt(26 + sqrt(628)).
    """
    d = float(_check_max_case(dim))
    disc = d * math.sqrt(157.0 + 152.0 / d + 16.0 / (d * d))
    return math.sqrt((13.0 * d + 4.0 - disc) / (24.0 * d))


def min_case_radius(dim: int) -> float:
    """Certified interior-minimum radius sqrt(1/sqrt(4D) - 1/4) for dim <= 3.

    At dim == 1 the formula gives exactly 1/2, touching the source sphere;
    radius_table flags that entry.
    """
    d = _check_min_case(dim)
    return math.sqrt(1.0 / math.sqrt(4.0 * d) - 0.25)


def min_case_radius_from_quadratic(dim: int) -> float:
    """Cross-check: smallest positive root of 16D x^2 + 8D x - (4-D) = 0,
    the quadratic obtained from the lower-bound gap polynomial, as a radius."""
    d = float(_check_min_case(dim))
    a, b, c = 16.0 * d, 8.0 * d, -(4.0 - d)
    x = (-b + math.sqrt(b * b - 4.0 * a * c)) / (2.0 * a)
    return math.sqrt(x)


@dataclass(frozen=True)
class RadiusReport:
    """Per-dimension assured radius with the applicable approximations.

    ``case`` is "maximum" (dim >= 5), "minimum" (dim <= 3) or "error"
    (dim == 4, where both extremum principles hold and no interior-extremum
    radius exists). ``touches_sources`` flags the dim == 1 minimum case,
    whose radius equals the source-sphere radius 1/2 exactly.
    """

    dimension: int
    case: str
    exact: float | None = None
    approx_simple: float | None = None
    approx_quadratic: float | None = None
    touches_sources: bool = False
    error: str | None = None


def radius_report(dim: int) -> RadiusReport:
    """Report for one dimension; dim == 4 yields an error entry."""
    d = int(dim)
    if d == 4:
        return RadiusReport(
            dimension=4,
            case="error",
            error="dimension 4 is harmonic: both extrema are on the boundary",
        )
    if d >= 5:
        return RadiusReport(
            dimension=d,
            case="maximum",
            exact=max_case_radius(d),
            approx_simple=max_case_radius_simple(d),
            approx_quadratic=max_case_radius_quadratic(d),
        )
    r = min_case_radius(d)
    return RadiusReport(
        dimension=d,
        case="minimum",
        exact=r,
        touches_sources=(d == 1),
    )


def radius_table(dims) -> list[RadiusReport]:
    """Reports for each dimension, in input order; mixed cases allowed."""
    return [radius_report(d) for d in dims]


def table_to_csv(reports) -> str:
    """Serialize reports as CSV: D,r_max,approx_simple,approx_quadratic,case
    with radii printed to four decimal places."""

    def fmt(v):
        return "" if v is None else f"{v:.4f}"

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["D", "r_max", "approx_simple", "approx_quadratic", "case"])
    for rep in reports:
        writer.writerow(
            [
                rep.dimension,
                fmt(rep.exact),
                fmt(rep.approx_simple),
                fmt(rep.approx_quadratic),
                rep.case,
            ]
        )
    return buf.getvalue()
