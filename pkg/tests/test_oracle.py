"""Grid oracle behaviour and agreement with the gradient-based search."""

import numpy as np
import pytest

from invsqfield import (
    Box,
    DimensionTooLarge,
    SourceInsideRegion,
    SourceSet,
    Sphere,
    brute_force_oracle,
    cross_polytope_sources,
    find_extremum,
)


def shell_config(rng, dim, n=4):
    dirs = rng.standard_normal((n, dim))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    src = dirs * rng.uniform(2.2, 4.0, (n, 1))
    return SourceSet(dim, src, rng.uniform(0.5, 2.0, n))


def test_d1_box_maximum():
    s = SourceSet(1, np.array([[2.0]]), np.array([1.0]))
    r = brute_force_oracle(s, Box(np.array([0.0]), np.array([1.0])), "max", 11)
    assert r.point[0] == 1.0
    assert r.value == 1.0
    assert r.location == "boundary"


def test_counterexample_d2_sphere_minimum():
    s = cross_polytope_sources(2)
    region = Sphere(np.zeros(2), 0.30)
    cell = 0.60 / 200
    coarse = brute_force_oracle(s, region, "min", 201, refine_levels=0)
    assert np.all(np.abs(coarse.point) <= cell)
    assert coarse.value == pytest.approx(16.0, abs=1e-3)
    refined = brute_force_oracle(s, region, "min", 201)
    assert refined.value == pytest.approx(16.0, abs=1e-9)
    assert refined.location == "interior"


def test_refinement_never_worse_than_coarse():
    rng = np.random.default_rng(40)
    s = shell_config(rng, 2)
    region = Sphere(np.zeros(2), 1.0)
    coarse = brute_force_oracle(s, region, "max", 31, refine_levels=0)
    refined = brute_force_oracle(s, region, "max", 31, refine_levels=4)
    assert refined.value >= coarse.value


def test_find_extremum_beats_oracle_floor_d3():
    rng = np.random.default_rng(41)
    for _ in range(3):
        s = shell_config(rng, 3)
        box = Box(-np.ones(3), np.ones(3))
        oracle = brute_force_oracle(s, box, "max", 21, refine_levels=0)
        found = find_extremum(s, box, "max")
        assert found.value >= oracle.value - 1e-6


@pytest.mark.parametrize("objective", ["max", "min"])
def test_two_sided_agreement_d2(objective):
    rng = np.random.default_rng(42)
    s = shell_config(rng, 2, n=5)
    box = Box(-np.ones(2), np.ones(2))
    oracle = brute_force_oracle(s, box, objective, 101)
    found = find_extremum(s, box, objective)
    assert found.value == pytest.approx(oracle.value, rel=1e-5)


def test_sphere_boundary_sweep_matches_search():
    rng = np.random.default_rng(43)
    s = shell_config(rng, 3)
    region = Sphere(np.zeros(3), 1.0)
    oracle = brute_force_oracle(s, region, "max", 41)
    found = find_extremum(s, region, "max")
    assert found.value == pytest.approx(oracle.value, rel=1e-6)
    assert oracle.location == "boundary"


def test_dimension_too_large():
    s = cross_polytope_sources(5)
    with pytest.raises(DimensionTooLarge):
        brute_force_oracle(s, Sphere(np.zeros(5), 0.05), "max", 5)


def test_resolution_validation():
    s = SourceSet(1, np.array([[2.0]]), np.array([1.0]))
    with pytest.raises(ValueError):
        brute_force_oracle(s, Box(np.array([0.0]), np.array([1.0])), "max", 2)


def test_source_inside_region_raises():
    s = SourceSet(2, np.array([[0.2, 0.0]]), np.array([1.0]))
    with pytest.raises(SourceInsideRegion):
        brute_force_oracle(s, Sphere(np.zeros(2), 1.0), "max", 11)


def test_determinism():
    rng = np.random.default_rng(44)
    s = shell_config(rng, 2)
    box = Box(-np.ones(2), np.ones(2))
    a = brute_force_oracle(s, box, "min", 41)
    b = brute_force_oracle(s, box, "min", 41)
    assert a.point.tobytes() == b.point.tobytes()
    assert a.value == b.value
