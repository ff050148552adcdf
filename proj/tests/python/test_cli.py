import math
import os
import subprocess
import xml.etree.ElementTree as ET

import pytest

CLI = os.environ.get("HYPKIT_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="HYPKIT_CLI not set")


def run(*args, cwd=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, cwd=cwd)


def kv(stdout):
    return dict(line.split("=", 1) for line in stdout.splitlines() if "=" in line)


def test_solve_right():
    r = run("--format", "kv", "solve", "--right", "a=1", "b=1")
    assert r.returncode == 0
    assert float(kv(r.stdout)["c"]) == pytest.approx(math.acosh(math.cosh(1.0) ** 2), rel=1e-10)


def test_solve_general_degrees():
    r = run("--format", "kv", "--angle-unit", "deg", "solve", "--general", "A=30", "B=30", "C=30")
    assert r.returncode == 0
    assert float(kv(r.stdout)["area"]) == pytest.approx(math.pi / 2, rel=1e-10)


def test_eval_and_unknown_quantity():
    r = run("--format", "kv", "eval", "parallelism", "y=1")
    out = kv(r.stdout)
    assert r.returncode == 0 and "formula" in out
    assert math.tan(float(out["Pi"]) / 2) * math.e == pytest.approx(1.0, abs=1e-12)
    assert run("eval", "bogus").returncode == 1


def test_exit_codes():
    assert run("quadrature", "1/7").returncode == 1
    assert run("solve", "--right", "alpha=1.6", "beta=0.2").returncode == 1
    assert run("eval", "arc-ratio", "x=800").returncode == 3
    assert run("--help").returncode == 0
    assert run("no-such-command").returncode == 1


def test_quadrature_build_writes_svg(tmp_path):
    svg = tmp_path / "square.svg"
    script = tmp_path / "square.script"
    r = run("--out", str(svg), "quadrature", "1", "--build", "--save-script", str(script))
    assert r.returncode == 0, r.stderr
    ET.parse(svg)
    replay = run("--out", str(tmp_path / "replay.svg"), "construct", str(script))
    assert replay.returncode == 0
    assert (tmp_path / "replay.svg").read_text() == svg.read_text()


def test_construct_failure_and_tol_override(tmp_path):
    assert run("emit", str(tmp_path)).returncode == 0
    script = tmp_path / "parallel.script"
    assert run("--out", str(tmp_path / "p.svg"), "construct", str(script)).returncode == 0
    assert run("--tol", "1e-30", "--out", str(tmp_path / "p.svg"), "construct", str(script)).returncode == 2


def test_empty_script(tmp_path):
    script = tmp_path / "empty.script"
    script.write_text('{"steps": []}')
    r = run("construct", str(script), cwd=tmp_path)
    assert r.returncode == 0
    root = ET.parse(tmp_path / "empty.svg").getroot()
    assert len(list(root)) == 1
