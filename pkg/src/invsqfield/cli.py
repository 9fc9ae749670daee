"""Command-line front end.

Subcommands: eval, classify, optimize, counterexample, rmax, verify.
Exit codes: 0 success, 1 probe failure, 2 input error, 3 singularity,
4 geometry violation. Identical command lines (including seeds) produce
byte-identical output.
"""

import argparse
import sys

import numpy as np

from .counterexample import cross_polytope_sources
from .errors import (
    CoincidentSource,
    DeltaOutOfRange,
    DimensionMismatch,
    DimensionTooLarge,
    ProblemFileError,
    SourceInsideRegion,
    UnsupportedDimension,
)
from .field import Harmonicity, classify, evaluate
from .problemfile import load_problem, save_problem
from .radius import radius_table, table_to_csv
from .regions import Sphere
from .search import SearchOptions, find_extremum, format_result, search_plan
from .verification import (
    bound_sandwich_probe,
    counterexample_interior_probe,
    extremum_principle_probe,
    gradient_probe,
    laplacian_probe,
)

_HARMONICITY_LABEL = {
    Harmonicity.SUBHARMONIC: "sub-harmonic",
    Harmonicity.HARMONIC: "harmonic",
    Harmonicity.SUPERHARMONIC: "super-harmonic",
}

EXIT_OK = 0
EXIT_PROBE_FAILURE = 1
EXIT_INPUT = 2
EXIT_SINGULARITY = 3
EXIT_GEOMETRY = 4


def _parse_point(text):
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise ProblemFileError(f"point: {exc}") from exc
    if not values:
        raise ProblemFileError("point: expected comma-separated reals")
    return np.asarray(values, dtype=np.float64)


def _parse_dims(text):
    """Dimension lists like '5..10,15,20,50,100' or '2,3'."""
    dims = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if ".." in tok:
            a, _, b = tok.partition("..")
            try:
                lo, hi = int(a), int(b)
            except ValueError as exc:
                raise ProblemFileError(f"dims: bad range {tok!r}") from exc
            if hi < lo:
                raise ProblemFileError(f"dims: empty range {tok!r}")
            dims.extend(range(lo, hi + 1))
        else:
            try:
                dims.append(int(tok))
            except ValueError as exc:
                raise ProblemFileError(f"dims: bad entry {tok!r}") from exc
    if not dims:
        raise ProblemFileError("dims: no dimensions given")
    if any(d < 1 for d in dims):
        raise ProblemFileError("dims: dimensions must be positive")
    return dims


def _cmd_eval(args):
    problem = load_problem(args.problem)
    point = _parse_point(args.point)
    value = evaluate(problem.sources, point)
    print(f"{value:.12g}")
    return EXIT_OK


def _cmd_classify(args):
    label = _HARMONICITY_LABEL[classify(args.dim)]
    plan_max = search_plan(args.dim, "max")
    plan_min = search_plan(args.dim, "min")
    print(f"{label}; max: {plan_max}; min: {plan_min}")
    return EXIT_OK


def _cmd_optimize(args):
    problem = load_problem(args.problem)
    if problem.region is None:
        raise ProblemFileError("region: required for optimize")
    opts = SearchOptions(seed=args.seed, starts=args.starts)
    result = find_extremum(problem.sources, problem.region, args.objective, opts)
    print(format_result(result))
    return EXIT_OK


def _cmd_counterexample(args):
    if args.dim < 1:
        raise ProblemFileError("dim: must be a positive integer")
    sources = cross_polytope_sources(args.dim)
    region = None
    if args.region_radius is not None:
        if not 0.0 < args.region_radius < 0.5:
            raise ProblemFileError("region-radius: must lie in (0, 0.5)")
        region = Sphere(np.zeros(args.dim), args.region_radius)
    save_problem(args.out, sources, region)
    print(f"wrote {args.out} (D={args.dim}, {sources.n_sources} sources)")
    return EXIT_OK


def _cmd_rmax(args):
    reports = radius_table(_parse_dims(args.dims))
    text = table_to_csv(reports)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        print(text, end="")
    return EXIT_OK


_SUITES = ("all", "maximum-principle", "bound-sandwich", "derivatives")


def _verify_probes(args):
    probes = []
    if args.suite in ("all", "maximum-principle"):
        for dim in (1, 2, 3, 4):
            probes.append(
                extremum_principle_probe(dim, "max", args.configs, args.samples, args.seed)
            )
        for dim in (4, 5, 6):
            probes.append(
                extremum_principle_probe(dim, "min", args.configs, args.samples, args.seed)
            )
    if args.suite in ("all", "bound-sandwich"):
        r_grid = [0.05, 0.10, 0.15, 0.20, 0.25]
        for dim in (2, 3, 5, 6):
            probes.append(bound_sandwich_probe(dim, r_grid, 200, args.seed))
    if args.suite in ("all", "derivatives"):
        for dim in (1, 2, 3, 4, 5, 6):
            probes.append(gradient_probe(dim, args.configs, args.seed))
        for dim in (1, 2, 3, 4, 5, 6, 7, 8):
            probes.append(laplacian_probe(dim, args.configs, args.seed))
    return probes


def _cmd_verify(args):
    if args.suite not in _SUITES:
        raise ProblemFileError(
            f"suite: unknown suite {args.suite!r}; choose from {', '.join(_SUITES)}"
        )
    if args.expect_counterexample:
        report = counterexample_interior_probe(args.dim, args.radius, args.samples, args.seed)
        print(report.to_text())
        if report.failures > 0:
            print(
                f"interior dominance confirmed: {report.failures} interior "
                f"samples beat the boundary extremum (expected)"
            )
            return EXIT_OK
        print("interior dominance NOT observed")
        return EXIT_PROBE_FAILURE
    probes = _verify_probes(args)
    for report in probes:
        print(report.to_text())
    failed = sum(1 for r in probes if not r.passed)
    if failed:
        print(f"FAILED probes: {failed}/{len(probes)}")
        return EXIT_PROBE_FAILURE
    print(f"all {len(probes)} probes passed")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="invsqfield",
        description="Inverse-square source fields: evaluation, harmonicity "
        "classification, boundary-restricted extremum search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate the field at a point")
    p.add_argument("--problem", required=True, help="problem file path")
    p.add_argument("--point", required=True, help="comma-separated coordinates")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("classify", help="harmonicity and search plan for a dimension")
    p.add_argument("dim", type=int)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("optimize", help="find the field extremum over the region")
    p.add_argument("--problem", required=True)
    p.add_argument("--objective", required=True, choices=("max", "min"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--starts", type=int, default=None)
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("counterexample", help="write a cross-polytope problem file")
    p.add_argument("dim", type=int)
    p.add_argument("--out", required=True)
    p.add_argument("--region-radius", type=float, default=None,
                   help="embed a sphere region of this radius around the origin")
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("rmax", help="assured-radius table as CSV")
    p.add_argument("--dims", required=True,
                   help="dimension list/ranges, e.g. '5..10,15,20,50,100'")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_rmax)

    p = sub.add_parser("verify", help="run verification probes")
    p.add_argument("suite", nargs="?", default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--configs", type=int, default=20)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--expect-counterexample", action="store_true",
                   help="probe the cross-polytope interior dominance instead")
    p.add_argument("--dim", type=int, default=5)
    p.add_argument("--radius", type=float, default=0.05)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ProblemFileError, DimensionMismatch, UnsupportedDimension,
            DeltaOutOfRange, DimensionTooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CoincidentSource as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULARITY
    except SourceInsideRegion as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GEOMETRY


if __name__ == "__main__":
    sys.exit(main())
