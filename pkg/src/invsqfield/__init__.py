"""Inverse-square point-source fields: evaluation, harmonicity-driven
boundary-restricted extremum search, cross-polytope counterexamples, and
assured-radius tables."""

from .counterexample import (
    cross_polytope_sources,
    lower_bound,
    lower_gap_numerator,
    symmetric_value,
    upper_bound,
    upper_gap_numerator,
)
from .errors import (
    CoincidentSource,
    DeltaOutOfRange,
    DimensionMismatch,
    DimensionTooLarge,
    FieldError,
    ProblemFileError,
    SourceInsideRegion,
    UnsupportedDimension,
)
from .field import (
    Harmonicity,
    SourceSet,
    as_point,
    classify,
    evaluate,
    evaluate_many,
    gradient,
    gradient_many,
    laplacian,
    laplacian_many,
)
from .oracle import brute_force_oracle
from .problemfile import Problem, load_problem, parse_problem, save_problem
from .radius import (
    RadiusReport,
    max_case_radius,
    max_case_radius_quadratic,
    max_case_radius_simple,
    min_case_radius,
    min_case_radius_from_quadratic,
    radius_report,
    radius_table,
    table_to_csv,
)
from .regions import Box, Sphere
from .search import (
    ExtremumResult,
    SearchOptions,
    find_boundary_extremum,
    find_extremum,
    format_result,
    search_plan,
)
from .verification import (
    ProbeReport,
    bound_sandwich_probe,
    counterexample_interior_probe,
    extremum_principle_probe,
    fd_gradient,
    fd_laplacian,
    gradient_probe,
    laplacian_probe,
)

__version__ = "0.1.0"
