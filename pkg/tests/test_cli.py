import csv
import io
import json
import shutil
import subprocess

import pytest

from goldenextremal import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_area(capsys):
    code, out, _ = run(capsys, "solve", "area", "--tol", "1e-9")
    assert code == 0
    assert "phi^3/2 = 2.1180339887" in out.splitlines()
    assert "exact certificate: OK" in out


@pytest.mark.parametrize("tol", ["0", "-1", "1", "abc"])
def test_bad_tol_is_usage_error(capsys, tol):
    code, _, err = run(capsys, "solve", "area", "--tol", tol)
    assert code == 1 and "error" in err


def test_isosceles_line(capsys):
    code, out, _ = run(capsys, "solve", "perimeter-isosceles")
    assert code == 0
    assert "v/h = 1.27201965 (√φ)" in out.splitlines()
    assert "s/h = 1.61803399 (φ)" in out.splitlines()


def test_both_readings(capsys):
    code, out, _ = run(capsys, "solve", "perimeter-nonacute", "--both-constraint-readings", "--format", "json")
    assert code == 0
    doc = cli.ResultDocument.from_json(out)
    assert doc.outputs["constraint_set"] == "non_acute"
    assert doc.outputs["alt_constraint_set"] == "non_acute+no_triangle"
    assert float(doc.outputs["perimeter"]) < float(doc.outputs["alt_perimeter"])


def test_nonconvergence_exit(capsys, monkeypatch):
    def boom(*a, **k):
        raise cli.ConvergenceError("stalled")

    monkeypatch.setattr(cli.ex, "solve_min_perimeter_no_triangle", boom)
    code, _, err = run(capsys, "solve", "perimeter-no-triangle")
    assert code == 2 and "did not converge" in err


def test_sequence_table(capsys):
    code, out, _ = run(capsys, "sequence", "--n-max", "2")
    assert code == 0
    lines = out.splitlines()
    assert "1, √(2φ), φ·√φ" in lines[3]
    assert lines[2].split()[-1] == "0.636009824757"
    assert lines[-1].startswith("limit") and lines[-1].endswith("0.809016994375")


def test_sequence_csv(capsys):
    code, out, _ = run(capsys, "sequence", "--n-max", "5", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 6
    assert rows[1]["sides"] == "1, √(2φ), φ·√φ"
    assert rows[0]["area"] == "0.636009824757"
    assert rows[-1]["n"] == "limit" and rows[-1]["area"] == "0.809016994375"


@pytest.mark.parametrize("n", ["0", "501", "x"])
def test_sequence_range(capsys, n):
    code, _, _ = run(capsys, "sequence", "--n-max", n)
    assert code == 1


def test_result_document_roundtrip(capsys):
    for argv in (["sequence", "--n-max", "3", "--format", "json"], ["solve", "area", "--format", "json"]):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        doc = cli.ResultDocument.from_json(out)
        assert doc.to_json() == out
        assert json.loads(out)["tool_version"] == cli.__version__


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "construction")
    assert code == 0 and "BE^2 = 2φ exact: OK" in out.splitlines()
    code, out, _ = run(capsys, "verify", "bounds")
    assert code == 0 and "equality at n=1,2: OK" in out
    code, out, _ = run(capsys, "verify", "all")
    assert code == 0 and "FAIL" not in out


def test_verify_failure_exit(capsys, monkeypatch):
    monkeypatch.setitem(cli.SUITES, "identities", lambda: [("broken", False)])
    code, out, _ = run(capsys, "verify", "identities")
    assert code == 3 and "broken: FAIL" in out


def test_render_and_trace(capsys, tmp_path):
    svg, txt = tmp_path / "f.svg", tmp_path / "t.txt"
    code, _, _ = run(capsys, "render", "fig3_construction", "--out", str(svg), "--trace-out", str(txt))
    assert code == 0
    assert svg.read_text(encoding="utf-8").startswith("<?xml")
    assert "golden_section_point" in txt.read_text(encoding="utf-8")


def test_render_usage(capsys, tmp_path):
    assert run(capsys, "render", "fig9", "--out", str(tmp_path / "x.svg"))[0] == 1
    assert run(capsys, "render", "fig1_min_area", "--out", str(tmp_path / "x.svg"), "--width", "0")[0] == 1
    assert run(capsys, "render", "fig1_min_area", "--out", str(tmp_path / "no" / "x.svg"))[0] == 1


def test_no_command_is_usage(capsys):
    assert run(capsys)[0] == 1


def test_out_file(capsys, tmp_path):
    p = tmp_path / "seq.json"
    code, out, _ = run(capsys, "sequence", "--n-max", "2", "--format", "json", "--out", str(p))
    assert code == 0 and out == ""
    assert json.loads(p.read_text(encoding="utf-8"))["command"] == "sequence"


@pytest.mark.skipif(shutil.which("goldenextremal") is None, reason="console script not installed")
def test_console_script():
    r = subprocess.run(["goldenextremal", "solve", "area", "--tol", "0"], capture_output=True)
    assert r.returncode == 1
    r = subprocess.run(["goldenextremal", "verify", "identities"], capture_output=True, text=True)
    assert r.returncode == 0 and "OK" in r.stdout
