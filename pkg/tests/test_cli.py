import json
import os
import subprocess
import sys

import pytest

from bcl import cli
from conftest import g_exact


def run(*argv):
    return cli.run(list(argv))


def test_capacity_json():
    code, out = run("capacity", "--channel", "thermal", "--eta", "0.5", "--N", "1", "--energy", "10", "--format", "json")
    assert code == 0
    assert json.loads(out)["capacity_bits"] == pytest.approx(g_exact(5.5) - g_exact(0.5), abs=1e-13)


def test_capacity_zero_and_contra():
    assert json.loads(run("capacity", "--channel", "addnoise", "--n", "0", "--energy", "0", "--format", "json")[1])["capacity_bits"] == 0
    code, out = run("capacity", "--channel", "contra-amp", "--kappa", "2", "--N", "0", "--energy", "10")
    assert code == 0 and "capacity_bits: 2.9658022036436" in out


@pytest.mark.parametrize(
    "args, eta0, kappa0",
    [
        (["--channel", "addnoise", "--n", "2"], 1 / 3, 3.0),
        (["--channel", "thermal", "--eta", "1", "--N", "5"], 1.0, 1.0),
        (["--channel", "amp", "--kappa", "2", "--N", "1"], 2 / 3, 3.0),
    ],
)
def test_decompose(args, eta0, kappa0):
    code, out = run("decompose", *args, "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["eta0"] == pytest.approx(eta0) and d["kappa0"] == pytest.approx(kappa0)


@pytest.mark.parametrize(
    "argv",
    [
        ["capacity", "--channel", "thermal", "--eta", "1.5", "--energy", "1"],
        ["capacity", "--channel", "amp", "--energy", "1"],
        ["capacity", "--channel", "amp", "--kappa", "2", "--energy", "-1"],
        ["capacity", "--channel", "amp", "--kappa", "2", "--energy", "1", "--bogus"],
        ["capacity", "--chan", "amp", "--kappa", "2", "--energy", "1"],
        ["decompose", "--channel", "laser"],
        ["verify", "--suite", "nonsense"],
        ["verify", "--suite", "additivity", "--dim", "20"],
        ["plot", "--panel", "fig9"],
    ],
)
def test_invalid_input_exit_1(argv):
    assert run(*argv)[0] == 1


def test_plot_atomic_file(tmp_path):
    path = tmp_path / "a.csv"
    code, out = run("plot", "--panel", "fig2a", "--out", str(path))
    assert code == 0 and out == ""
    lines = path.read_text().splitlines()
    assert lines[0] == "panel,series,x,value"
    row = [l for l in lines if l.startswith("fig2a,C_thermal[N=0],1,")]
    assert len(row) == 1 and float(row[0].split(",")[3]) == pytest.approx(g_exact(10), abs=1e-13)
    assert [p.name for p in tmp_path.iterdir()] == ["a.csv"]


def test_plot_io_failure(tmp_path):
    assert run("plot", "--panel", "fig2c", "--out", str(tmp_path / "missing" / "x.csv"))[0] == 1


def test_plot_stdout_is_byte_identical():
    a = run("plot", "--panel", "fig2d")[1]
    assert a == run("plot", "--panel", "fig2d")[1]
    assert "fig2d,Smin_addnoise,2,2.754887502163468" in a


def test_verify_exit_codes(tmp_path):
    small = ["--dim", "6", "--samples", "10", "--no-refine"]
    assert run("verify", "--suite", "conjecture", *small)[0] == 0
    assert run("verify", "--suite", "conjecture", *small, "--tolerance", "0")[0] == 2
    assert run("verify", "--suite", "transposition", "--kappa", "2", "--dim", "4")[0] == 1
    assert run("verify", "--suite", "spectra", "--dim", "4", "--samples", "2", "--budget", "1e-30")[0] == 3


def test_verify_report_reproducible(tmp_path):
    args = ["verify", "--suite", "spectra", "--samples", "5", "--dim", "5", "--seed", "9", "--omit-timing"]
    r1, r2 = tmp_path / "r1.json", tmp_path / "r2.json"
    c1, o1 = run(*args, "--report", str(r1))
    c2, o2 = run(*args, "--threads", "2", "--report", str(r2))
    assert c1 == c2 == 0 and o1 == o2
    assert r1.read_bytes() == r2.read_bytes()
    rep = json.loads(o1)
    assert rep["test"] == "spectra" and rep["seed"] == 9 and rep["elapsed_seconds"] == 0.0


def test_threads_env_override(monkeypatch):
    monkeypatch.setenv("BCL_THREADS", "3")
    ns = cli.build_parser().parse_args(["verify", "--threads", "1"])
    assert cli.suite_config(ns).threads == 3
    monkeypatch.setenv("BCL_THREADS", "auto")
    assert cli.suite_config(ns).threads >= 1


def test_help_documents_flags():
    proc = subprocess.run([sys.executable, "-m", "bcl", "verify", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    for flag in ("--suite", "--kappa", "--dim", "--samples", "--seed", "--tolerance", "--budget", "--threads", "--report"):
        assert flag in proc.stdout
    assert "default" in proc.stdout
    top = subprocess.run([sys.executable, "-m", "bcl", "--help"], capture_output=True, text=True)
    assert top.returncode == 0 and "verify" in top.stdout
