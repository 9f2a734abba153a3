"""Command-line surface: flags, formats, exit codes, determinism."""

import json
import subprocess
import sys

from sumrank.cli import main

EXAMPLE_BUILD = [
    "tlrs-build",
    "--p", "5", "--m", "1", "--r", "2",
    "--ell", "2", "--k", "1", "--h", "0",
    "--eta", "2+1u",
]


def run_cli(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_verify_examples_passes(capsys):
    code, out = run_cli(capsys, ["verify-paper-examples"])
    assert code == 0
    assert "MISMATCH" not in out
    assert "12/12 checks passed" in out


def test_tlrs_build_example(capsys):
    code, out = run_cli(capsys, EXAMPLE_BUILD + ["--format", "json"])
    assert code == 0
    record = json.loads(out)
    assert record["gram"] == [["4", "1"], ["1", "3"]]
    assert record["det"] == "1"
    assert record["lcd_by_criterion"] and record["lcd_by_oracle"]
    assert record["hull_dim"] == 0


def test_tlrs_build_self_orthogonal(capsys):
    argv = [a if a != "2+1u" else "2+0u" for a in EXAMPLE_BUILD]
    code, out = run_cli(capsys, argv + ["--format", "json"])
    assert code == 0
    record = json.loads(out)
    assert all(all(x == "0" for x in row) for row in record["gram"])
    assert not record["lcd_by_criterion"]
    assert record["hull_dim"] == 2


def test_acd_search(capsys):
    code, out = run_cli(
        capsys,
        ["acd-search", "--p", "5", "--k", "1", "--ell", "3",
         "--with-distance", "--format", "json"],
    )
    assert code == 0
    record = json.loads(out)
    assert record["acd_by_matrix"] and record["acd_by_oracle"]
    assert record["mds_by_criterion"]
    assert record["min_distance"] == 3
    assert record["singleton_bound"] == 3


def test_acd_build_with_gamma(capsys):
    code, out = run_cli(
        capsys,
        ["acd-build", "--p", "5", "--k", "1", "--lambda", "2,3",
         "--gamma", "0+1u", "--with-distance", "--format", "json"],
    )
    assert code == 0
    record = json.loads(out)
    assert record["t"] == [["4", "0"], ["0", "3"]]
    assert record["min_distance"] == 2


def test_invalid_config_exit_code(capsys):
    code = main(EXAMPLE_BUILD[:-1] + ["not-an-element"])
    assert code == 2
    code = main(
        ["tlrs-build", "--p", "5", "--ell", "2", "--k", "9", "--eta", "2+1u"]
    )
    assert code == 2
    code = main(["acd-search", "--p", "5", "--k", "2", "--ell", "3"])
    assert code == 2


def test_guard_exceeded_exit_code(capsys):
    code = main(EXAMPLE_BUILD + ["--with-distance", "--max-enum", "3"])
    assert code == 3


def test_search_not_found_exit_code(capsys):
    # geometric-only search at q=5, ell=2 exhausts both primitive elements
    code = main(
        ["acd-search", "--p", "5", "--k", "1", "--ell", "2",
         "--strategy", "geometric"]
    )
    assert code == 1


def test_sweep_deterministic(capsys):
    argv = [
        "tlrs-sweep", "--p", "5", "--m", "1", "--r", "2",
        "--ell", "2", "--k", "1", "--format", "json",
    ]
    _, first = run_cli(capsys, argv)
    _, second = run_cli(capsys, argv)
    assert first == second
    rows = [json.loads(line) for line in first.splitlines()]
    assert len(rows) == 48  # 24 nonzero etas x 2 twist exponents
    for row in rows:
        assert row["lcd_by_criterion"] == row["lcd_by_oracle"]


def test_acd_sweep_agrees(capsys):
    code, out = run_cli(
        capsys,
        ["acd-sweep", "--p", "5", "--count", "40", "--seed", "1",
         "--format", "json"],
    )
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 40
    assert all(row["agree"] for row in rows)


def test_csv_format(capsys):
    code, out = run_cli(
        capsys,
        ["tlrs-sweep", "--p", "5", "--ell", "2", "--k", "1", "--h", "0",
         "--format", "csv"],
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("schema,kind,p,m,r,ell,k,h,eta,det")
    assert len(lines) == 25  # header + 24 rows


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "sumrank.cli", "verify-paper-examples"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "12/12 checks passed" in proc.stdout
