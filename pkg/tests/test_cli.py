import csv
import io
import json
import subprocess
import sys

import pytest

from qtcomb import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


BASE = ("--q", "1/2", "--t", "1/3")


def test_catalan_one_bar_both_routes(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "catalan", "--lambda", "1,1,1", "--n", "3",
                       *BASE, "--route", "both", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["values"] == {"algebraic": "1", "combinatorial": "1"}
    assert data["equal"] is True
    assert "elapsed_ms" not in data


def test_binom_empty_mu(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "binom", "--mu", "", "--n", "2", "--z", "3,1", *BASE)
    assert code == 0
    assert "algebraic: 1" in out


def test_w_routes_agree(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "w", "--lambda", "2,1", "--n", "2", "--z", "2,5/3",
                       *BASE, "--route", "both", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["equal"]
    assert data["request"]["z"] == ["2", "5/3"]


@pytest.mark.parametrize("kind,extra", [
    ("psi", ["--lambda", "3,1", "--mu", "2"]),
    ("lah", ["--lambda", "2,1", "--mu", "1", "--n", "2"]),
    ("bracket", ["--mu", "2,1", "--n", "2", "--z", "4,2", "--s", "2,1/3"]),
    ("W", ["--lambda", "2", "--z", "3,2", "--a", "1/5", "--b", "2/7"]),
])
def test_other_kinds(capsys, kind, extra):
    route = "algebraic" if kind == "W" else "both"
    code, out, _ = run(capsys, "compute", "--kind", kind, *extra, *BASE, "--route", route)
    assert code == 0, out


def test_csv_output(capsys):
    code, out, _ = run(capsys, "compute", "--kind", "lah", "--lambda", "2,1", "--mu", "1", "--n", "2",
                       *BASE, "--route", "both", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 1
    assert rows[0]["value.algebraic"] == rows[0]["value.combinatorial"]
    assert rows[0]["equal"] == "true"


def test_timing_flag(capsys):
    _, out, _ = run(capsys, "compute", "--kind", "catalan", "--lambda", "1", "--n", "1", *BASE,
                    "--format", "json", "--timing")
    assert "elapsed_ms" in json.loads(out)


@pytest.mark.parametrize("argv", [
    ["compute", "--kind", "w", *BASE],                                  # no lambda / z
    ["compute", "--kind", "catalan", "--lambda", "2", "--n", "2", *BASE],
    ["compute", "--kind", "w", "--lambda", "1", "--z", "1", "--q", "1", "--t", "2"],
    ["compute", "--kind", "w", "--lambda", "1,2", "--z", "1", *BASE],
    ["compute", "--kind", "psi", "--lambda", "2,2", "--mu", "", *BASE],
    ["compute", "--kind", "binom", "--mu", "1", "--n", "1", "--z", "1/2", *BASE],
    ["compute", "--kind", "nope", *BASE],
    ["verify", "--max-n", "0"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_singular_point_reports_signature(capsys):
    code, _, err = run(capsys, "compute", "--kind", "catalan", "--lambda", "2,1", "--n", "2",
                       "--q", "2", "--t", "1/2", "--format", "json")
    assert code == 3
    data = json.loads(err)
    assert data["error"] == "denominator_vanishes"
    assert data["signature"] == [1, 1]


def test_unequal_routes_exit_1(capsys, monkeypatch):
    monkeypatch.setattr(cli.nb, "catalan_comb", lambda lam, n, pt: 7)
    code, out, _ = run(capsys, "compute", "--kind", "catalan", "--lambda", "2,1", "--n", "2", *BASE,
                       "--route", "both")
    assert code == 1
    # both values and the request are shown
    assert "combinatorial: 7" in out and "request: kind=catalan lambda=2,1" in out
    assert "equal: false" in out


def test_verify_lemmas(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemmas", "--max-weight", "4", "--max-n", "3")
    assert code == 0
    assert out.rstrip().endswith("ALL PASS")


def test_verify_deterministic(capsys):
    args = ["verify", "--suite", "catalan", "--max-weight", "4", "--max-n", "2", "--seed", "7",
            "--format", "json"]
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    assert json.loads(first)["ok"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli.run_verify.__globals__["nb"], "binom_comb", lambda z, mu, n, pt: -1)
    code, out, _ = run(capsys, "verify", "--suite", "binom", "--max-weight", "2", "--max-n", "1")
    assert code == 1
    assert "first counterexample" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qtcomb", "compute", "--kind", "binom", "--mu", "1",
                          "--n", "1", "--z", "2", *BASE], capture_output=True, text=True)
    assert res.returncode == 0
    assert "algebraic: 3/2" in res.stdout
