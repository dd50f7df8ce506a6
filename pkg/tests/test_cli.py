import csv
import io
import json

import pytest

from parabolica import cli, report
from parabolica.report import CheckResult


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_report_grassmannian_rows(capsys):
    code, out, _ = run(capsys, "report", "sl", "4", "R", "p2", "--csv", "--no-curvature")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["type"] for r in rows] == ["rank 1", "rank 2"]
    assert rows[0]["applicable_results"] == "COR_4_8;THM_GRASS_2N"
    assert rows[1]["smoothly_isolated"] == "1" and "COR_4_2" in rows[1]["applicable_results"]


def test_report_conformal_json(capsys):
    code, out, _ = run(capsys, "report", "o", "3", "4", "--json", "--no-curvature")
    assert code == 0
    data = json.loads(out)
    (model,) = data["models"]
    assert model["id"] == "o(3,4)" and model["types"] == 3
    assert [v["type"] for v in model["verdicts"]] == ["spacelike", "timelike", "null"]


def test_report_quaternionic_markdown(capsys):
    code, out, _ = run(capsys, "report", "sl", "3", "H", "p1", "--no-curvature")
    assert code == 0
    assert "THM_QUAT" in out and "COR_4_2" in out


def test_report_with_curvature_and_out(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "report", "sp", "4", "R", "--json", "--out", str(path))
    assert code == 0 and out == ""
    data = json.loads(path.read_text())
    assert data["models"][0]["verdicts"][0]["curvature"]


def test_report_is_deterministic(capsys):
    outs = [run(capsys, "report", "o", "2", "3", "--json")[1] for _ in range(2)]
    assert outs[0] == outs[1]


@pytest.mark.parametrize("argv", [
    ("report", "sl", "4", "X", "p2"),
    ("report", "sl", "4", "R", "p9"),
    ("report", "o", "5", "5", "spinor"),
    ("verify", "sl", "3", "R", "p1", "--suite", "bogus"),
    ("frobnicate",),
    ("zoo", "sl", "3"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "usage" in err


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "sl", "3", "R", "p1", "all")
    assert code == 0
    assert "all checks passed" in out and "FAIL" not in out


def test_verify_json_suite_option(capsys):
    code, out, _ = run(capsys, "verify", "o", "2", "3", "--suite", "sl2", "--json")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert {c["suite"] for c in data["checks"]} == {"sl2"}


def test_verify_failure_exits_1(capsys, monkeypatch):
    def broken(model):
        return [CheckResult("grading", "forced", False, 0.0, {}, {"witness": [1, 2]})]
    monkeypatch.setitem(report.SUITE_FUNCS, "grading", broken)
    code, out, err = run(capsys, "verify", "sl", "3", "R", "p1", "grading")
    assert code == 1
    assert "FAIL grading" in out
    assert json.loads(err)["counterexample"] == {"witness": [1, 2]}


def test_zoo_listing(capsys):
    code, out, _ = run(capsys, "zoo", "--json")
    data = json.loads(out)
    assert code == 0 and data["count"] == 13
    assert not any(m["golden_missing"] for m in data["models"])
    code, out, _ = run(capsys, "zoo")
    assert "MISSING GOLDEN" not in out and out.startswith("zoo version")


def test_zoo_flags_missing_golden(capsys, monkeypatch, tmp_path):
    monkeypatch.setattr(cli, "golden_dir", lambda: tmp_path)
    code, out, _ = run(capsys, "zoo")
    assert code == 0
    assert out.count("MISSING GOLDEN") == 13


def test_golden_names():
    assert cli.golden_name("sl(3,R)/p1") == "sl_3_R_p1.json"
    assert cli.golden_name("o(5,5)/spin") == "o_5_5_spin.json"


def test_verify_spinorial_kostant(capsys):
    code, out, _ = run(capsys, "verify", "o", "5", "5", "spin", "kostant")
    assert code == 0
    assert "o(5,5)/spin: all checks passed" in out
