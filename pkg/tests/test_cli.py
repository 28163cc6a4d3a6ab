"""
Test CLI commands end to end.

These tests run the console script (or the module) in a subprocess and
check its output files and exit codes.
"""
import json
import shutil
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest


def get_cli_command():
    """Get the CLI command to run."""
    cli_path = shutil.which("twocenter")
    if cli_path:
        return [cli_path]
    return [sys.executable, "-m", "twocenter_invariants.cli"]


def run_cli(*args, timeout=300, check=False):
    """
    Helper function to run CLI commands.

    Args:
        *args: CLI arguments
        timeout: Command timeout in seconds
        check: Whether to check return code

    Returns:
        subprocess.CompletedProcess
    """
    cmd = get_cli_command() + [str(a) for a in args]
    return subprocess.run(
        cmd,
        capture_output=True,
        text=True,
        timeout=timeout,
        check=check
    )


def test_cli_version():
    """Test that version command works."""
    result = run_cli("version")

    assert result.returncode == 0, "Version command should succeed"
    assert "twocenter-invariants" in result.stdout


def test_cli_help():
    """Test that help lists every command."""
    result = run_cli("--help")

    assert result.returncode == 0
    for command in ("orbit", "invariants", "verify", "sweep", "version"):
        assert command in result.stdout


# ============================================================================
# ORBIT
# ============================================================================


def test_orbit_writes_json_and_svg(tmp_path):
    """Test that orbit writes a dump and a well-formed SVG."""
    dump = tmp_path / "orbit.json"
    svg = tmp_path / "out.svg"
    result = run_cli("orbit", "--mu", 0.5, "--c", -0.5, "--k", 3, "--l", 2,
                     "--output", dump, "--svg", svg, "--arrows")

    assert result.returncode == 0, result.stderr
    payload = json.loads(dump.read_text())
    assert {"mu", "c", "k", "l", "f_lambda", "lambda_max", "T_lambda", "T_nu", "phase",
            "samples", "collision_markers"} <= set(payload)
    assert (payload["k"], payload["l"]) == (3, 2)
    assert payload["collision_markers"] == []

    root = ET.parse(svg).getroot()
    assert root.tag.endswith("svg")


def test_orbit_csv():
    """Test the CSV dump header."""
    result = run_cli("orbit", "--k", 2, "--l", 3, "--format", "csv")

    assert result.returncode == 0, result.stderr
    lines = result.stdout.splitlines()
    assert lines[0] == "q1,q2"
    assert len(lines) > 64


def test_orbit_collision_markers():
    """Test that collision orbits carry their two markers."""
    result = run_cli("orbit", "--k", 3, "--l", 2, "--collision", "primary")

    assert result.returncode == 0, result.stderr
    assert len(json.loads(result.stdout)["collision_markers"]) == 2


def test_orbit_deterministic():
    """Test that identical flags give byte-identical JSON."""
    first = run_cli("orbit", "--k", 2, "--l", 3)
    second = run_cli("orbit", "--k", 2, "--l", 3)

    assert first.returncode == 0
    assert first.stdout == second.stdout


def test_orbit_rejects_non_coprime():
    result = run_cli("orbit", "--k", 2, "--l", 4)

    assert result.returncode == 2
    assert "k and l must be coprime" in result.stderr


def test_orbit_rejects_low_energy():
    result = run_cli("orbit", "--c", -2, "--mu", 0.5, "--k", 3, "--l", 2)

    assert result.returncode == 2
    assert "c below critical value c_J = -1" in result.stderr


def test_orbit_requires_pair():
    result = run_cli("orbit", "--k", 3)

    assert result.returncode == 2


# ============================================================================
# INVARIANTS
# ============================================================================


@pytest.mark.parametrize("k,l,expected", [
    (3, 2, {"j0": 4, "jE": 1, "jM": 1, "n": 2, "jEM": 0}),
    (2, 3, {"j0": 5, "jE": 9, "jM": 9, "n": 3, "jEM": 2}),
])
def test_invariants_json(k, l, expected):
    """Test the invariant JSON of the worked examples."""
    result = run_cli("invariants", "--k", k, "--l", l)

    assert result.returncode == 0, result.stderr
    payload = json.loads(result.stdout)
    assert payload["invariants"] == expected
    assert set(payload["stages"]) == {"K", "K_E", "K_M", "K_EM"}


def test_invariants_from_dump(tmp_path):
    """Test that --from reproduces the direct computation."""
    dump = tmp_path / "orbit.json"
    assert run_cli("orbit", "--k", 3, "--l", 2, "--output", dump).returncode == 0

    direct = json.loads(run_cli("invariants", "--k", 3, "--l", 2).stdout)
    from_dump = run_cli("invariants", "--from", dump)

    assert from_dump.returncode == 0, from_dump.stderr
    assert json.loads(from_dump.stdout)["invariants"] == direct["invariants"]


@pytest.mark.parametrize("samples", [[[0, 0], [1]], [[0, 0], ["a", "b"]], 7])
def test_invariants_from_malformed_dump(tmp_path, samples):
    """Test that a dump with unusable samples exits 3 without a traceback."""
    dump = tmp_path / "orbit.json"
    assert run_cli("orbit", "--k", 3, "--l", 2, "--output", dump).returncode == 0
    payload = json.loads(dump.read_text())
    payload["samples"] = samples
    dump.write_text(json.dumps(payload))

    result = run_cli("invariants", "--from", dump)

    assert result.returncode == 3
    assert "malformed orbit dump" in result.stderr
    assert "Traceback" not in result.stderr


def test_invariants_from_invalid_json(tmp_path):
    dump = tmp_path / "orbit.json"
    dump.write_text("{not json")

    result = run_cli("invariants", "--from", dump)

    assert result.returncode == 3
    assert "not valid JSON" in result.stderr


def test_invariants_console():
    result = run_cli("invariants", "--k", 3, "--l", 2, "--format", "console")

    assert result.returncode == 0, result.stderr
    assert "{4, 1, 1, (0 mod 4), 2}" in result.stdout
    assert "match" in result.stdout


def test_invariants_non_generic_suggests_phase():
    """Test that a rejected crossing exits 3 and suggests another phase."""
    result = run_cli("invariants", "--k", 3, "--l", 2, "--tol-geom", 1.6)

    assert result.returncode == 3
    assert "--phase" in result.stderr


# ============================================================================
# VERIFY AND SWEEP
# ============================================================================


def test_verify_json():
    result = run_cli("verify", "--k", 3, "--l", 2, "--format", "json")

    assert result.returncode == 0, result.stdout
    payload = json.loads(result.stdout)
    assert payload["passed"] is True
    assert payload["numeric"] == payload["closed_form"]


def test_verify_precondition():
    result = run_cli("verify", "--k", 2, "--l", 4)

    assert result.returncode == 2


def test_sweep_empty_range(tmp_path):
    """Test that an empty range gives an empty summary and exit 0."""
    result = run_cli("sweep", "--max-k", 0, "--mu", 0.5, "--out-dir", tmp_path)

    assert result.returncode == 0, result.stderr
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["tori"] == 0
    assert summary["passed"] is True


def test_sweep_small_grid(tmp_path):
    """Test a sweep over k, l ≤ 2 with per-torus reports."""
    result = run_cli("sweep", "--max-k", 2, "--max-l", 2, "--mu", 0.5, "--out-dir", tmp_path)

    assert result.returncode == 0, result.stdout + result.stderr
    assert (tmp_path / "summary.csv").read_text().startswith("mu,c,k,l,passed")
    reports = sorted(tmp_path.glob("report_*.json"))
    assert len(reports) == 3


def test_sweep_injected_failure(tmp_path):
    """Test that a failing tolerance gives exit 1 and names the failing check."""
    config = tmp_path / "sweep.yaml"
    config.write_text("mus: [0.5]\ncs: auto\nmax_k: 1\nmax_l: 2\nangle_tol: 1.6\n")
    result = run_cli("sweep", "--config", config)

    assert result.returncode == 1
    assert "invariants" in result.stderr


def test_sweep_rejects_bad_config(tmp_path):
    config = tmp_path / "sweep.yaml"
    config.write_text("mus: [0.5]\nresolution_typo: 12\n")
    result = run_cli("sweep", "--config", config)

    assert result.returncode == 2
