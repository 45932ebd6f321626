import io
import os
import subprocess
import sys
from pathlib import Path

import pytest

from probcat.cli import main

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"

CASES = {
    "check_coins": (["check", "coins.pc"], 0),
    "check_nulls": (["check", "nulls.pc"], 0),
    "condexp_coins": (["condexp", "coins.pc", "--arrow", "first", "--rv", "heads"], 0),
    "condexp_nulls": (["condexp", "nulls.pc", "--arrow", "f", "--rv", "v"], 0),
    "measurable_lead": (["measurable", "coins.pc", "--arrow", "first", "--rv", "lead"], 0),
    "measurable_heads": (["measurable", "coins.pc", "--arrow", "first", "--rv", "heads"], 1),
    "indep_tail": (["indep", "coins.pc", "--arrow", "first", "--rv", "tail"], 0),
    "indep_lead": (["indep", "coins.pc", "--arrow", "first", "--rv", "lead"], 1),
    "indep_arrows": (["indep", "coins.pc", "--arrow", "first", "--arrow2", "second"], 0),
    "complete_nulls": (["complete", "nulls.pc", "--space", "X"], 0),
    "binomial_countones": (["binomial", "--p", "1/2", "--t", "2", "--s", "1", "--payoff", "countones"], 0),
    "binomial_asset": (["binomial", "--p", "1/3", "--t", "3", "--s", "1", "--payoff", "asset:2,1/2"], 0),
    "binomial_file": (["binomial", "--p", "1/3", "--t", "2", "--s", "1", "--payoff", "@payoff.pc:call"], 0),
    "bad_null": (["check", "bad_null.pc"], 2),
    "bad_sum": (["check", "bad_sum.pc"], 2),
    "bad_name": (["check", "bad_name.pc"], 2),
    "bad_syntax": (["check", "bad_syntax.pc"], 2),
}


def run(argv, cwd=DATA):
    out, err = io.StringIO(), io.StringIO()
    old = os.getcwd()
    os.chdir(cwd)
    try:
        code = main(argv, stdout=out, stderr=err)
    finally:
        os.chdir(old)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    argv, expected_code = CASES[name]
    code, out, err = run(argv)
    assert code == expected_code
    assert out == (GOLDEN / f"{name}.out").read_text(encoding="utf-8")
    assert err == (GOLDEN / f"{name}.err").read_text(encoding="utf-8")


def test_worked_binomial_example():
    code, out, _ = run(["binomial", "--p", "1/2", "--t", "2", "--s", "1", "--payoff", "countones"])
    assert code == 0
    assert out.splitlines() == ["0: 1/2", "1: 3/2"]


def test_null_violation_names_the_atom():
    code, _, err = run(["check", "bad_null.pc"])
    assert code == 2
    assert "null atom x2" in err


@pytest.mark.parametrize("name", sorted(CASES))
def test_output_is_byte_identical_across_runs(name):
    argv, _ = CASES[name]
    assert run(argv) == run(argv)


def test_byte_identical_across_processes():
    argv = ["-m", "probcat", "condexp", "coins.pc", "--arrow", "first", "--rv", "heads"]
    outs = {
        subprocess.run([sys.executable, *argv], cwd=DATA, capture_output=True, check=True).stdout
        for _ in range(2)
    }
    assert len(outs) == 1


def test_usage_errors_exit_2():
    assert run(["condexp", "coins.pc"])[0] == 2
    assert run(["indep", "coins.pc", "--arrow", "first"])[0] == 2
    assert run(["check", "missing.pc"])[0] == 2
    assert run(["binomial", "--p", "3/2", "--t", "2", "--s", "1", "--payoff", "countones"])[0] == 2
    assert run(["binomial", "--p", "1/2", "--t", "2", "--s", "3", "--payoff", "countones"])[0] == 2
    assert run(["binomial", "--p", "1/2", "--t", "2", "--s", "1", "--payoff", "asset:2"])[0] == 2


def test_horizon_cap_from_environment(monkeypatch):
    argv = ["binomial", "--p", "1/2", "--t", "3", "--s", "1", "--payoff", "countones"]
    assert run(argv)[0] == 0
    monkeypatch.setenv("PROBCAT_HORIZON_CAP", "2")
    code, _, err = run(argv)
    assert code == 2 and "horizon cap 2" in err
