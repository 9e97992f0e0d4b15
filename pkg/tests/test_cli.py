import csv
import io
import json
import math
import subprocess
import sys

import pytest

from rwbounds import presets
from rwbounds.bounds import BoundsReport, report
from rwbounds.cli import RunConfig, emit, fmt, main, run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    sys_out, sys_err = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err
    try:
        code = main(list(argv))
    finally:
        sys.stdout, sys.stderr = sys_out, sys_err
    return code, out.getvalue(), err.getvalue()


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def write_spec(tmp_path, obj, name="spec.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


class TestExamples:
    def test_alpha_gaussian(self):
        code, out, _ = invoke("alpha", "--dist", str(presets.path("gaussian_1_1")))
        assert code == 0
        lines = out.splitlines()
        assert "alpha=2.0" in lines and "riskiness=0.5" in lines and "gaussian_rate=2.0" in lines

    def test_bare_preset_file_name(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, out, _ = invoke("alpha", "--dist", "gaussian_1_1.json")
        assert code == 0 and "alpha=2.0" in out.splitlines()

    def test_bounds_two_point(self):
        code, out, _ = invoke("bounds", "--preset", "twopoint_07", "--d", "2")
        assert code == 0
        row = rows(out)[0]
        assert row["quantity"] == "emax"
        assert float(row["lower"]) == pytest.approx(5.24543, abs=1e-5)
        assert float(row["upper"]) == pytest.approx(33.8039, abs=1e-4)
        assert float(row["exact_or_estimate"]) == pytest.approx(70 / 9, rel=1e-11)

    def test_report_example5(self):
        code, out, _ = invoke("report", "--preset", "example5", "--n", "20000")
        assert code == 0
        alpha_line = next(line for line in out.splitlines() if line.startswith("alpha "))
        assert float(alpha_line.split()[1]) == pytest.approx(0.318, abs=5e-4)
        statuses = [line.split()[-1] for line in out.splitlines()
                    if line.split()[-1] in ("PASS", "FAIL")]
        assert statuses and all(s == "PASS" for s in statuses)

    def test_report_matches_bounds_module(self):
        code, out, _ = invoke("report", "--preset", "gaussian_1_1", "--n", "5000",
                              "--format", "json")
        assert code == 0
        payload = json.loads(out)
        ref = report(presets.load("gaussian_1_1"), 1.0, [0.5, 1.0, 2.0])
        again = BoundsReport.from_dict(payload["bounds"])
        assert again == ref
        emax = next(c for c in payload["checks"] if c["check"] == "expected_max")
        assert emax["lower"] == ref.emax_lower and emax["upper"] == ref.emax_upper

    def test_excess_heavy_tail(self):
        code, out, _ = invoke("excess", "--preset", "lomax_gamma3")
        assert code == 0
        obj = json.loads(out)
        assert math.isinf(obj["d_plus"]) and obj["finite_plus"] is False
        code, out, _ = invoke("excess", "--preset", "lomax_gamma3", "--cap", "100")
        assert math.isfinite(json.loads(out)["d_plus"])

    def test_simulate_modes(self):
        for mode in ("max", "min", "martingale"):
            code, out, _ = invoke("simulate", mode, "--preset", "twopoint_07", "--d", "2",
                                  "--n", "20000")
            assert code == 0
            got = rows(out)
            assert got and all(r["in_band"] in ("true", "") for r in got)

    def test_embed(self):
        code, out, _ = invoke("embed", "--preset", "three_atom", "--scheme", "ay",
                              "--n", "20000")
        assert code == 0
        got = rows(out)
        assert [r["quantity"] for r in got].count("frequency") == 3
        assert all(r["in_band"] == "true" for r in got if r["in_band"])


class TestErrors:
    def test_validation_error_exit_2(self, tmp_path):
        path = write_spec(tmp_path, {"family": "two_point",
                                     "params": {"x_minus": -1, "x_plus": 1, "p_plus": 0.5}})
        code, out, err = invoke("alpha", "--dist", path)
        assert code == 2 and out == ""
        assert len(err.splitlines()) == 1
        assert err.startswith("error: NonPositiveMean:")

    def test_missing_file_exit_2(self, tmp_path):
        code, _, err = invoke("alpha", "--dist", str(tmp_path / "absent.json"))
        assert code == 2 and err.startswith("error: FileNotFoundError:")

    def test_malformed_json_exit_2(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{")
        code, _, err = invoke("bounds", "--dist", str(p), "--d", "1")
        assert code == 2 and err.startswith("error: InvalidParameter:")

    def test_embed_needs_finite_support(self):
        code, _, err = invoke("embed", "--preset", "gaussian_1_1")
        assert code == 2

    def test_numerical_failure_exit_3(self):
        code, _, err = invoke("simulate", "martingale", "--preset", "gaussian_1_1",
                              "--steps", "200", "--n", "100")
        assert code == 3 and err.startswith("error: OverflowGuard:")

    def test_console_script_exit_code(self, tmp_path):
        path = write_spec(tmp_path, {"family": "gaussian", "params": {"mu": -1, "sigma": 1}})
        proc = subprocess.run([sys.executable, "-m", "rwbounds", "alpha", "--dist", path],
                              capture_output=True, text=True)
        assert proc.returncode == 2
        assert proc.stderr.count("\n") == 1


class TestOutput:
    def test_header_only_csv(self):
        buf = io.StringIO()
        emit({"header": ["quantity", "x", "lower", "upper"], "rows": []}, "csv", buf)
        assert buf.getvalue() == "quantity,x,lower,upper\n"

    def test_twelve_significant_digits(self):
        assert fmt(1 / 3) == "0.333333333333"
        assert fmt(2.0) == "2.0"
        assert fmt(None) == ""
        assert fmt(True) == "true"
        assert fmt(7) == "7"

    def test_byte_identical_reruns(self):
        argv = ("simulate", "min", "--preset", "three_atom", "--n", "5000", "--x", "1")
        first = invoke(*argv)[1]
        assert invoke(*argv)[1] == first
        other = invoke(*argv, "--seed", "0x1")[1]
        assert other != first

    def test_bounds_json_round_trip(self):
        code, out, _ = invoke("bounds", "--preset", "gaussian_1_1", "--d", "1", "--x", "0.5",
                              "--format", "json")
        again = BoundsReport.from_dict(json.loads(out))
        assert again == report(presets.load("gaussian_1_1"), 1.0, [0.5])

    def test_run_with_config(self):
        out, err = io.StringIO(), io.StringIO()
        cfg = RunConfig("alpha", preset="twopoint_07", output="csv")
        assert run(cfg, out, err) == 0
        assert rows(out.getvalue())[0]["value"] == fmt(math.log(7 / 3))
