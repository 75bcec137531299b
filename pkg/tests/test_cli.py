import json
import subprocess
import sys

import pytest

from hhfrac.cli import main
from hhfrac.serialize import json_to_csv


def run(*args, cwd=None):
    return subprocess.run([sys.executable, "-m", "hhfrac", *args], capture_output=True, text=True, cwd=cwd)


def test_bad_interval_exit_2():
    p = run("verify", "--a", "2", "--b", "1")
    assert p.returncode == 2
    assert "interval requires a < b" in p.stderr


def test_usage_error_exit_2():
    assert run("verify", "--alpha").returncode == 2
    assert run("frobnicate").returncode == 2


def test_constants_mu1(capsys):
    assert main(["constants", "--name", "mu1", "--a", "1", "--b", "2", "--q", "2", "--format", "json"]) == 0
    (row,) = json.loads(capsys.readouterr().out)
    assert row["theorem_id"] == "const_mu1"
    assert row["lhs"] == pytest.approx(1 / 12) and row["rhs"] == pytest.approx(1 / 12)


def test_constants_flags_c3(capsys):
    assert main(["constants", "--name", "C3_powermean", "--a", "1", "--b", "2", "--alpha", "0.5", "--format", "json"]) == 0
    (row,) = json.loads(capsys.readouterr().out)
    assert row["status"] == "discrepancy"


def test_unknown_constant(capsys):
    assert main(["constants", "--name", "nope"]) == 2
    assert "unknown constant" in capsys.readouterr().err


def test_unknown_function(capsys):
    assert main(["bounds", "--functions", "cosh", "--a", "1", "--b", "2"]) == 2


def test_bounds_subset(capsys):
    code = main(["bounds", "--functions", "exp", "--a", "1", "--b", "2", "--alpha", "0.5", "--q", "2"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("theorem_id,")
    assert {ln.split(",")[0] for ln in lines[1:]} == {"thm13", "thm14", "thm22", "thm23",
                                                       "thm24", "thm25", "thm26"}


def test_middle_and_identity(capsys):
    assert main(["middle", "--functions", "log", "--a", "1", "--b", "5", "--alpha", "0.25"]) == 0
    out = capsys.readouterr().out
    assert "hh_left" in out and "hh_right" in out
    assert main(["identity", "--functions", "log", "--a", "1", "--b", "5", "--alpha", "0.25", "--format", "text"]) == 0


def test_convexity(capsys):
    assert main(["convexity", "--functions", "sq", "--a", "1", "--b", "2", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert all(r["grid"] and r["reciprocal"] for r in rows)


def test_specfun(capsys):
    assert main(["specfun", "gamma", "5"]) == 0
    assert float(capsys.readouterr().out) == pytest.approx(24.0)
    assert main(["specfun", "beta", "1"]) == 2
    assert main(["specfun", "gamma", "-1"]) == 2


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"a": 1, "b": 2, "alpha": [0.5], "functions": ["exp"], "format": "json"}))
    assert main(["middle", "--config", str(cfg), "--alpha", "2"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert {r["alpha"] for r in rows if r["theorem_id"].startswith("hh_")} == {2.0}
    cfg.write_text(json.dumps({"bogus": 1}))
    assert main(["middle", "--config", str(cfg)]) == 2


def test_json_output_converts_to_identical_csv(tmp_path):
    args = ["verify", "--functions", "sq", "--a", "1", "--b", "2", "--alpha", "0.5", "1.5", "--q", "1", "2"]
    assert main([*args, "--out", str(tmp_path / "r.csv")]) == 0
    assert main([*args, "--format", "json", "--out", str(tmp_path / "r.json")]) == 0
    assert json_to_csv((tmp_path / "r.json").read_text()) == (tmp_path / "r.csv").read_text()


def test_fail_exit_code(monkeypatch, capsys):
    import hhfrac.theorems as th

    monkeypatch.setattr(th, "bound_thm25", lambda *a, **k: -1.0)
    assert main(["bounds", "--functions", "sq", "--a", "1", "--b", "2", "--alpha", "0.5"]) == 1


def test_numerical_exit_code(monkeypatch, capsys):
    import hhfrac.theorems as th
    from hhfrac.errors import QuadratureError

    def boom(*a, **k):
        raise QuadratureError("forced")

    monkeypatch.setattr(th, "bound_thm25", boom)
    assert main(["bounds", "--functions", "sq", "--a", "1", "--b", "2", "--alpha", "0.5"]) == 3
