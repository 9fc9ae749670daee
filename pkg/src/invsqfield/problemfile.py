"""Problem files: JSON documents holding a source configuration and an
optional search region.

Schema (see problems/ for committed samples):

    {
      "dimension": 3,
      "sources": [[2.0, 0.0, 0.0], ...],
      "weights": [1.0, ...],
      "region": {"type": "sphere", "center": [0, 0, 0], "radius": 1.0}
    }

A box region uses {"type": "box", "lower": [...], "upper": [...]}. The
region key may be omitted. Validation errors name the offending field;
syntax errors carry the line and column from the JSON parser.
"""

import json
from dataclasses import dataclass
from numbers import Real

import numpy as np

from .errors import DimensionMismatch, ProblemFileError
from .field import SourceSet
from .regions import Box, Sphere


@dataclass(frozen=True)
class Problem:
    sources: SourceSet
    region: Sphere | Box | None = None


def _require(cond, field, message):
    if not cond:
        raise ProblemFileError(f"{field}: {message}")


def _real_vector(value, field, dim=None):
    _require(isinstance(value, list), field, "expected a list of numbers")
    _require(all(isinstance(v, Real) and not isinstance(v, bool) for v in value),
             field, "expected a list of numbers")
    if dim is not None:
        _require(len(value) == dim, field,
                 f"expected {dim} coordinates, got {len(value)}")
    vec = np.asarray(value, dtype=np.float64)
    _require(bool(np.all(np.isfinite(vec))), field, "coordinates must be finite")
    return vec


def _parse_region(data, dim):
    _require(isinstance(data, dict), "region", "expected an object")
    kind = data.get("type")
    if kind == "sphere":
        center = _real_vector(data.get("center"), "region.center", dim)
        radius = data.get("radius")
        _require(isinstance(radius, Real) and not isinstance(radius, bool)
                 and radius > 0, "region.radius", "must be a positive number")
        return Sphere(center, float(radius))
    if kind == "box":
        lower = _real_vector(data.get("lower"), "region.lower", dim)
        upper = _real_vector(data.get("upper"), "region.upper", dim)
        _require(bool(np.all(lower < upper)), "region.upper",
                 "must exceed region.lower componentwise")
        return Box(lower, upper)
    raise ProblemFileError(f"region.type: expected 'sphere' or 'box', got {kind!r}")


def parse_problem(text: str, name: str = "<problem>") -> Problem:
    """Parse and validate a problem document from a JSON string."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"{name}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    _require(isinstance(data, dict), "document", "expected a JSON object")

    dim = data.get("dimension")
    _require(isinstance(dim, int) and not isinstance(dim, bool) and dim >= 1,
             "dimension", "must be a positive integer")

    raw_sources = data.get("sources")
    _require(isinstance(raw_sources, list) and len(raw_sources) >= 1,
             "sources", "expected a non-empty list of coordinate vectors")
    rows = [_real_vector(s, f"sources[{i}]", dim) for i, s in enumerate(raw_sources)]

    raw_weights = data.get("weights")
    _require(isinstance(raw_weights, list), "weights", "expected a list of numbers")
    _require(len(raw_weights) == len(rows), "weights",
             f"expected {len(rows)} entries, got {len(raw_weights)}")
    for i, w in enumerate(raw_weights):
        _require(isinstance(w, Real) and not isinstance(w, bool) and np.isfinite(w)
                 and w > 0, f"weights[{i}]", "must be a strictly positive number")

    try:
        sources = SourceSet(dimension=dim, sources=np.vstack(rows),
                            weights=np.asarray(raw_weights, dtype=np.float64))
    except DimensionMismatch as exc:
        raise ProblemFileError(f"sources: {exc}") from exc

    region = None
    if "region" in data and data["region"] is not None:
        region = _parse_region(data["region"], dim)
    return Problem(sources=sources, region=region)


def load_problem(path) -> Problem:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ProblemFileError(f"{path}: {exc.strerror or exc}") from exc
    return parse_problem(text, name=str(path))


def problem_to_dict(sources: SourceSet, region=None) -> dict:
    doc = {
        "dimension": sources.dimension,
        "sources": [list(map(float, row)) for row in sources.sources],
        "weights": [float(w) for w in sources.weights],
    }
    if isinstance(region, Sphere):
        doc["region"] = {
            "type": "sphere",
            "center": [float(c) for c in region.center],
            "radius": float(region.radius),
        }
    elif isinstance(region, Box):
        doc["region"] = {
            "type": "box",
            "lower": [float(v) for v in region.lower],
            "upper": [float(v) for v in region.upper],
        }
    return doc


def save_problem(path, sources: SourceSet, region=None):
    with open(path, "w") as fh:
        json.dump(problem_to_dict(sources, region), fh, indent=2)
        fh.write("\n")
