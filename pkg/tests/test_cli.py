import csv
import io
import json
from fractions import Fraction

import pytest
from click.testing import CliRunner

from ghzcc import main
from ghzcc.game import analysis
from ghzcc.modules.sweep import COLUMNS as SWEEP_COLUMNS
from ghzcc.utils import parse_fraction


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main.cli, list(args))


def test_quantum_noiseless(runner):
    result = invoke(runner, "quantum", "--n", "2", "--p", "0", "--format", "json")
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["schema_version"] == 1
    assert report["report"] == "quantum"
    assert report["exact"] == pytest.approx(1.0)


def test_quantum_sampled(runner):
    args = ["quantum", "--n", "3", "--p", "0.5", "--shots", "100000", "--seed", "7"]
    result = invoke(runner, *args, "--format", "json")
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["exact"] == pytest.approx(0.75)
    sampled = report["sampled"]
    assert sampled["seed"] == 7
    assert abs(sampled["mean"] - 0.75) <= 4 * sampled["std_error"]
    assert sampled["within_bound"] is True


def test_quantum_rejects_bad_p(runner):
    result = invoke(runner, "quantum", "--n", "2", "--p", "1.5")
    assert result.exit_code == 1
    assert "p must be in [0, 1]" in result.output


def test_output_is_reproducible(runner):
    args = ["quantum", "--n", "2", "--p", "0.4", "--shots", "20000", "--seed", "9"]
    first = invoke(runner, *args, "--format", "json")
    second = invoke(runner, *args, "--format", "json", "--threads", "4")
    assert first.output == second.output


def test_json_round_trips(runner):
    result = invoke(runner, "sweep", "--n", "3", "--p-grid", "0:1:5", "--format", "json")
    parsed = json.loads(result.output)
    assert json.dumps(parsed, indent=2, sort_keys=True, ensure_ascii=False) + "\n" == result.output


def test_classical_two(runner):
    result = invoke(runner, "classical", "--n", "2", "--format", "json")
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert parse_fraction(report["optimum"]["fraction"]) == parse_fraction("3/4")
    assert report["optimum"]["decimal"] == 0.75
    assert report["perfect_found"] is False
    assert report["strategies_examined"] == 65536
    assert len(report["witnesses"]) <= 1024


def test_classical_three_pretty(runner):
    result = invoke(runner, "classical", "--n", "3")
    assert result.exit_code == 0, result.output
    assert "3/4 (0.75)" in result.output


def test_classical_rejects_large_n(runner):
    assert invoke(runner, "classical", "--n", "7").exit_code == 1


def test_sweep_csv(runner):
    result = invoke(runner, "sweep", "--n", "2", "--p-grid", "0:1:11", "--format", "csv")
    assert result.exit_code == 0, result.output
    rows = list(csv.DictReader(io.StringIO(result.output)))
    assert len(rows) == 11
    assert list(rows[0]) == SWEEP_COLUMNS
    assert [row["advantage"] for row in rows] == ["true"] * 5 + ["false"] * 6
    assert rows[3]["entanglement_class"] == "genuinely entangled"


def test_sweep_single_boundary(runner):
    result = invoke(runner, "sweep", "--n", "5", "--p-grid", "0.5:0.5:1", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(result.output)))
    assert len(rows) == 1
    assert rows[0]["advantage"] == "false"


@pytest.mark.parametrize("grid", [None, "", "1:0:3", "0:1:0"])
def test_sweep_bad_grid(runner, grid):
    args = ["sweep", "--n", "2"] + ([] if grid is None else ["--p-grid", grid])
    result = invoke(runner, *args)
    assert result.exit_code == 1
    assert result.output.startswith("Error")


def test_table1(runner):
    result = invoke(runner, "table1")
    assert result.exit_code == 0, result.output
    assert "all cells match" in result.output


def test_table1_json(runner):
    report = json.loads(invoke(runner, "table1", "--format", "json").output)
    assert report["all_match"] is True
    assert len(report["cells"]) == 64
    cell = [c for c in report["cells"] if (c["encoding_1"], c["encoding_2"]) == (4, 4)][0]
    assert cell["success"]["fraction"] == "3/4"
    assert cell["highlight"] is True
    assert cell["decodings"] == [0, 13]


def test_table1_mismatch_exits_two(runner, monkeypatch):
    broken = dict(analysis.TABLE1_EXPECTED)
    broken[8] = (Fraction(5, 8),) + analysis.TABLE1_EXPECTED[8][1:]
    monkeypatch.setattr(analysis, "TABLE1_EXPECTED", broken)
    result = invoke(runner, "table1")
    assert result.exit_code == 2
    assert "E8 x E0" in result.output


def test_verify_phase_table_and_fault(runner):
    result = invoke(runner, "verify", "--ghz-k", "3", "--inject-fault")
    assert result.exit_code == 2
    assert "Pauli strings on |G_3>" in result.output
    assert "FAIL  injected-fault" in result.output
    assert result.output.count("S_z=") == 8


def test_verify_passes(runner):
    result = invoke(runner, "verify", "--format", "json")
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    assert report["passed"] is True
    assert all(check["passed"] for check in report["checks"])


def test_output_file(runner, tmp_path):
    target = tmp_path / "sweep.csv"
    result = invoke(
        runner, "sweep", "--n", "2", "--p-grid", "0:1:3", "--format", "csv", "--output", str(target)
    )
    assert result.exit_code == 0
    assert result.output == ""
    assert target.read_text(encoding="utf-8").splitlines()[0].startswith("n,p,")


def test_run_maps_usage_errors():
    assert main.run(["quantum", "--n", "abc"]) == 1
    assert main.run(["nonexistent"]) == 1
    assert main.run(["quantum", "--n", "2", "--p", "0"]) == 0
