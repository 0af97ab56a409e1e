"""End-to-end CLI checks: golden-file byte determinism for every
subcommand, exit-code contracts, config-file precedence, and format
agreement between the CSV and JSON renderers."""

import json
import pathlib
import subprocess
import sys

import pytest

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "phase_shifts.csv": ["phase-shifts", "--mass", "1", "--energy", "1.5",
                         "--delta", "1", "--lmax", "10"],
    "wavefunction.csv": ["wavefunction", "--mass", "1", "--energy", "1.5",
                         "--delta", "1", "--ell", "1", "--r", "0.5:0.5:5.0"],
    "cross_section.csv": ["cross-section", "--mass", "1", "--energy", "1.5",
                          "--delta", "0.5", "--lmax", "300",
                          "--theta",
                          "0.7853981633974483:0.7853981633974483:3.141592653589793"],
    "bound_states.csv": ["bound-states", "--mass", "1", "--delta", "0.5",
                         "--nmax", "2", "--lmax", "2"],
    "thermo.csv": ["thermo", "--beta", "0.01:0.01:0.05", "--xi", "5",
                   "--tau", "1"],
    "angular.json": ["angular", "--chi", "2", "--lam", "3", "--zeta", "1",
                     "--nmax", "4", "--format", "json"],
    "screened_fit.json": ["screened-fit", "--phi", "1", "--gamma-screen", "2",
                          "--format", "json"],
}


def run_cli(*argv, check=False):
    result = subprocess.run([sys.executable, "-m", "ptdrsc", *argv],
                            capture_output=True)
    if check:
        assert result.returncode == 0, result.stderr.decode()
    return result


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_outputs_are_reproduced_byte_for_byte(name):
    want = (GOLDEN_DIR / name).read_bytes()
    got = run_cli(*GOLDEN_CASES[name], check=True).stdout
    assert got == want


def test_repeated_runs_are_deterministic():
    argv = GOLDEN_CASES["thermo.csv"]
    first = run_cli(*argv, check=True).stdout
    second = run_cli(*argv, check=True).stdout
    assert first == second


def test_out_file_matches_stdout(tmp_path):
    target = tmp_path / "table.csv"
    argv = GOLDEN_CASES["phase_shifts.csv"]
    streamed = run_cli(*argv, check=True).stdout
    run_cli(*argv, "--out", str(target), check=True)
    assert target.read_bytes() == streamed


def test_csv_is_rfc4180_crlf():
    out = run_cli(*GOLDEN_CASES["bound_states.csv"], check=True).stdout
    assert out.count(b"\r\n") == out.count(b"\n")
    header = out.split(b"\r\n", 1)[0]
    assert header == b"n_r,ell,energy,nonrel_energy"


def test_json_parses_and_matches_csv_numbers():
    csv_out = run_cli("bound-states", "--mass", "1", "--delta", "0.5",
                      "--nmax", "1", "--lmax", "1", check=True).stdout
    json_out = run_cli("bound-states", "--mass", "1", "--delta", "0.5",
                       "--nmax", "1", "--lmax", "1", "--format", "json",
                       check=True).stdout
    rows = json.loads(json_out)
    lines = csv_out.decode().strip().splitlines()
    header = lines[0].split(",")
    assert [set(r) == set(header) for r in rows]
    for line, row in zip(lines[1:], rows):
        for name, cell in zip(header, line.split(",")):
            assert float(cell) == pytest.approx(float(row[name]), rel=1e-11)


def test_twelve_significant_digits():
    out = run_cli(*GOLDEN_CASES["phase_shifts.csv"], check=True).stdout.decode()
    value = out.strip().splitlines()[1].split(",")[1]
    mantissa = value.split("e")[0].replace("-", "").replace(".", "")
    assert len(mantissa) == 12


def test_usage_errors_exit_1():
    r = run_cli("phase-shifts", "--mass", "1", "--delta", "1")
    assert r.returncode == 1
    assert b"energy" in r.stderr
    assert r.stdout == b""
    assert r.stderr.count(b"\n") == 1  # one-line diagnostic
    assert run_cli("no-such-command").returncode == 1
    assert run_cli("thermo", "--beta", "1:2", "--xi", "1").returncode == 1
    assert run_cli("thermo", "--beta", "abc", "--xi", "1").returncode == 1
    assert run_cli("cross-section", "--energy", "1.5", "--delta", "1",
                   "--theta", "1", "--smoothing", "boxcar").returncode == 1


def test_domain_errors_exit_2():
    r = run_cli("phase-shifts", "--mass", "1", "--energy", "0.5", "--delta", "1")
    assert r.returncode == 2
    assert r.stdout == b""
    assert r.stderr.count(b"\n") == 1
    assert run_cli("bound-states", "--delta", "-1").returncode == 2
    assert run_cli("angular", "--chi", "0.2", "--lam", "2").returncode == 2


def test_numerical_errors_exit_3():
    # partition function overflows double range at this xi
    r = run_cli("thermo", "--beta", "1", "--xi", "50")
    assert r.returncode == 3
    assert r.stdout == b""


def test_config_file_supplies_defaults(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults for the sweep\nmass = 1.0\nenergy = 1.5\n"
                   "delta = 1\nlmax = 2\n")
    out = run_cli("phase-shifts", "--config", str(cfg), check=True).stdout
    direct = run_cli("phase-shifts", "--mass", "1.0", "--energy", "1.5",
                     "--delta", "1", "--lmax", "2", check=True).stdout
    assert out == direct


def test_flags_override_config(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("mass = 1.0\nenergy = 9.9\ndelta = 1\nlmax = 2\n")
    out = run_cli("phase-shifts", "--config", str(cfg), "--energy", "1.5",
                  check=True).stdout
    direct = run_cli("phase-shifts", "--mass", "1.0", "--energy", "1.5",
                     "--delta", "1", "--lmax", "2", check=True).stdout
    assert out == direct


def test_config_rejects_unknown_keys(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("masss = 1.0\n")
    r = run_cli("phase-shifts", "--config", str(cfg), "--energy", "1.5",
                "--delta", "1")
    assert r.returncode == 1
    assert b"masss" in r.stderr


def test_sweep_includes_endpoint():
    out = run_cli("wavefunction", "--energy", "1.5", "--delta", "1",
                  "--r", "1.0:0.25:2.0", check=True).stdout.decode()
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 5
    assert rows[-1].startswith("2.00000000000e+00")
