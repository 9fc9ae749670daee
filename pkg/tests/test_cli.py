"""CLI subcommands, exit codes and output determinism."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

SAMPLES = Path(__file__).resolve().parent.parent / "problems"

TABLE2 = {
    "5": "0.0603", "6": "0.0783", "7": "0.0892", "8": "0.0966", "9": "0.1021",
    "10": "0.1063", "15": "0.1183", "20": "0.1240", "50": "0.1337", "100": "0.1369",
}


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "invsqfield", *args],
        capture_output=True,
        text=True,
    )


class TestEval:
    def test_counterexample_origin(self):
        r = run_cli("eval", "--problem", str(SAMPLES / "counterexample_d5.json"),
                    "--point", "0,0,0,0,0")
        assert r.returncode == 0
        assert float(r.stdout) == 40.0

    def test_single_source_unit_distance(self):
        r = run_cli("eval", "--problem", str(SAMPLES / "single_source_d3.json"),
                    "--point", "1,0,0")
        assert r.returncode == 0
        assert float(r.stdout) == 1.0

    def test_malformed_file_names_field(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({
            "dimension": 2, "sources": [[1.0, 0.0]], "weights": [-1.0],
        }))
        r = run_cli("eval", "--problem", str(bad), "--point", "0,0")
        assert r.returncode == 2
        assert "weights[0]" in r.stderr

    def test_coincident_point_exits_3(self):
        r = run_cli("eval", "--problem", str(SAMPLES / "counterexample_d5.json"),
                    "--point", "0.5,0,0,0,0")
        assert r.returncode == 3

    def test_wrong_dimension_point_exits_2(self):
        r = run_cli("eval", "--problem", str(SAMPLES / "single_source_d3.json"),
                    "--point", "1,0")
        assert r.returncode == 2


class TestClassify:
    @pytest.mark.parametrize(
        "dim,expected",
        [
            ("3", "sub-harmonic; max: boundary; min: full"),
            ("4", "harmonic; max: boundary; min: boundary"),
            ("6", "super-harmonic; max: full; min: boundary"),
        ],
    )
    def test_output(self, dim, expected):
        r = run_cli("classify", dim)
        assert r.returncode == 0
        assert r.stdout.strip() == expected

    def test_non_integer_exits_2(self):
        assert run_cli("classify", "pi").returncode == 2

    def test_zero_exits_2(self):
        assert run_cli("classify", "0").returncode == 2


class TestOptimize:
    def test_single_source_boundary_max(self):
        r = run_cli("optimize", "--problem", str(SAMPLES / "single_source_d3.json"),
                    "--objective", "max")
        assert r.returncode == 0
        out = dict(line.split(": ", 1) for line in r.stdout.strip().splitlines())
        assert out["location"] == "boundary"
        assert out["restricted"] == "true"
        assert float(out["value"]) == pytest.approx(1.0, abs=1e-9)

    def test_counterexample_interior_max(self):
        r = run_cli("optimize", "--problem", str(SAMPLES / "counterexample_d5.json"),
                    "--objective", "max")
        assert r.returncode == 0
        out = dict(line.split(": ", 1) for line in r.stdout.strip().splitlines())
        assert out["location"] == "interior"
        assert out["restricted"] == "false"
        assert float(out["value"]) == pytest.approx(40.0, abs=1e-9)
        point = [float(t) for t in out["point"].split(",")]
        assert max(abs(c) for c in point) < 1e-6

    def test_source_inside_region_exits_4(self, tmp_path):
        bad = tmp_path / "inside.json"
        bad.write_text(json.dumps({
            "dimension": 2,
            "sources": [[0.2, 0.0]],
            "weights": [1.0],
            "region": {"type": "sphere", "center": [0, 0], "radius": 1.0},
        }))
        r = run_cli("optimize", "--problem", str(bad), "--objective", "max")
        assert r.returncode == 4

    def test_missing_region_exits_2(self, tmp_path):
        prob = tmp_path / "noregion.json"
        prob.write_text(json.dumps({
            "dimension": 2, "sources": [[2.0, 0.0]], "weights": [1.0],
        }))
        r = run_cli("optimize", "--problem", str(prob), "--objective", "max")
        assert r.returncode == 2


class TestCounterexample:
    def test_d5_matches_reference_rows(self, tmp_path):
        out = tmp_path / "ctr.json"
        r = run_cli("counterexample", "5", "--out", str(out))
        assert r.returncode == 0
        doc = json.loads(out.read_text())
        assert doc["dimension"] == 5
        assert len(doc["sources"]) == 10
        for i in range(5):
            row = [0.0] * 5
            row[i] = 0.5
            assert doc["sources"][i] == row
            row[i] = -0.5
            assert doc["sources"][5 + i] == row
        assert doc["weights"] == [1.0] * 10

    def test_d1(self, tmp_path):
        out = tmp_path / "ctr1.json"
        assert run_cli("counterexample", "1", "--out", str(out)).returncode == 0
        doc = json.loads(out.read_text())
        assert doc["sources"] == [[0.5], [-0.5]]

    def test_round_trip_center_value(self, tmp_path):
        out = tmp_path / "ctr7.json"
        run_cli("counterexample", "7", "--out", str(out))
        r = run_cli("eval", "--problem", str(out), "--point", "0,0,0,0,0,0,0")
        assert float(r.stdout) == 56.0

    def test_invalid_dim_exits_2(self, tmp_path):
        r = run_cli("counterexample", "0", "--out", str(tmp_path / "x.json"))
        assert r.returncode == 2

    def test_region_radius_embeds_sphere(self, tmp_path):
        out = tmp_path / "ctr2.json"
        run_cli("counterexample", "2", "--out", str(out), "--region-radius", "0.3")
        doc = json.loads(out.read_text())
        assert doc["region"]["type"] == "sphere"
        assert doc["region"]["radius"] == 0.3


class TestRmax:
    def test_table_reproduction(self):
        r = run_cli("rmax", "--dims", "5..10,15,20,50,100")
        assert r.returncode == 0
        lines = r.stdout.strip().splitlines()
        assert lines[0] == "D,r_max,approx_simple,approx_quadratic,case"
        rows = {ln.split(",")[0]: ln.split(",") for ln in lines[1:]}
        for dim, expected in TABLE2.items():
            assert rows[dim][1] == expected
            assert rows[dim][4] == "maximum"

    def test_min_case_rows(self):
        r = run_cli("rmax", "--dims", "2,3")
        lines = r.stdout.strip().splitlines()
        assert lines[1] == "2,0.3218,,,minimum"
        assert lines[2] == "3,0.1967,,,minimum"

    def test_d4_error_row(self):
        r = run_cli("rmax", "--dims", "4")
        assert r.returncode == 0
        assert r.stdout.strip().splitlines()[1] == "4,,,,error"

    def test_out_file(self, tmp_path):
        out = tmp_path / "table.csv"
        r = run_cli("rmax", "--dims", "5,6", "--out", str(out))
        assert r.returncode == 0
        assert out.read_text().startswith("D,r_max")

    def test_bad_dims_exit_2(self):
        assert run_cli("rmax", "--dims", "five").returncode == 2
        assert run_cli("rmax", "--dims", "9..5").returncode == 2


class TestVerify:
    def test_bound_sandwich_suite_passes(self):
        r = run_cli("verify", "bound-sandwich", "--seed", "0")
        assert r.returncode == 0
        assert "probes passed" in r.stdout

    def test_maximum_principle_small(self):
        r = run_cli("verify", "maximum-principle", "--configs", "3", "--samples", "40")
        assert r.returncode == 0

    def test_expected_counterexample(self):
        r = run_cli("verify", "maximum-principle", "--expect-counterexample",
                    "--dim", "5", "--radius", "0.05", "--samples", "100")
        assert r.returncode == 0
        assert "interior dominance confirmed" in r.stdout

    def test_unknown_suite_exits_2(self):
        assert run_cli("verify", "spectral").returncode == 2

    def test_stdout_determinism(self):
        args = ("verify", "bound-sandwich", "--seed", "7")
        a = run_cli(*args)
        b = run_cli(*args)
        assert a.stdout == b.stdout
        assert a.returncode == b.returncode == 0


class TestDeterminism:
    def test_optimize_byte_identical(self):
        args = ("optimize", "--problem", str(SAMPLES / "random_d3.json"),
                "--objective", "min", "--seed", "3")
        a = run_cli(*args)
        b = run_cli(*args)
        assert a.stdout == b.stdout

    def test_rmax_byte_identical(self):
        a = run_cli("rmax", "--dims", "5..10")
        b = run_cli("rmax", "--dims", "5..10")
        assert a.stdout == b.stdout
