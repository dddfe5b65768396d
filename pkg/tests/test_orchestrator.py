"""Tests for the orchestrator.

Suites are injected as plain functions so no numerics run here.
"""

import csv
import json

import pytest

from src.core.config import RunConfig
from src.core.report import CheckResult, SuiteResult
from src.orchestrator import Orchestrator, RunResult


def passing(name):
    def run(config, rng):
        return SuiteResult(name, [CheckResult(f"{name}-check", 0.0, 1e-9, {"draw": float(rng.random())})])
    return run


def failing(config, rng):
    return SuiteResult("modular", [CheckResult("round-trips", 1.0, 1e-9)])


def raising(config, rng):
    raise ValueError("singular matrix")


def affine_with_curve(config, rng):
    return SuiteResult("affine", [CheckResult.boolean("monotonicity", True, {"curve": [[-1.0, 0.3], [1.0, 0.0]]})])


ALL_PASSING = {name: passing(name) for name in ("axioms", "modular", "geodesic", "jordan", "semigroup", "bgl", "affine")}


class TestRunResult:
    """Tests for RunResult."""

    def test_success_requires_all_suites(self):
        """One failing suite fails the run."""
        result = RunResult("all", 7, [SuiteResult("a"), SuiteResult("b", errors=["x"])])
        assert not result.success

    def test_summary(self):
        """Summary counts suites, checks and errors."""
        result = RunResult("all", 7, [SuiteResult("a", [CheckResult("c", 1.0, 0.0)])], ["late"])
        assert result.summary == "all: 0/1 suites passed, 0/1 checks passed, 1 errors"


class TestOrchestratorProcess:
    """Tests for Orchestrator.process()."""

    def test_all_runs_every_suite_in_order(self):
        """The all command reports suites in the fixed order."""
        result = Orchestrator(RunConfig(), ALL_PASSING).process("all")
        assert [s.name for s in result.suites] == list(ALL_PASSING)
        assert result.success

    def test_single_suite(self):
        """A suite subcommand runs only that suite."""
        result = Orchestrator(RunConfig(), ALL_PASSING).process("jordan")
        assert [s.name for s in result.suites] == ["jordan"]

    def test_failing_check_fails_run(self):
        """A check over tolerance fails the run."""
        result = Orchestrator(RunConfig(), {**ALL_PASSING, "modular": failing}).process("modular")
        assert not result.success

    def test_exception_becomes_suite_error(self):
        """A raising suite is recorded, not propagated."""
        result = Orchestrator(RunConfig(), {**ALL_PASSING, "bgl": raising}).process("all")
        bgl = next(s for s in result.suites if s.name == "bgl")
        assert bgl.errors == ["ValueError: singular matrix"]
        assert sum(s.passed for s in result.suites) == 6

    def test_unknown_command(self):
        """Unknown commands are run errors."""
        result = Orchestrator(RunConfig(), ALL_PASSING).process("everything")
        assert result.errors == ["Unknown command: everything"]
        assert not result.success

    @pytest.mark.parametrize("workers", [1, 4])
    def test_results_independent_of_workers(self, workers):
        """Each suite's generator depends only on seed and suite name."""
        serial = Orchestrator(RunConfig(workers=1), ALL_PASSING).process("all")
        parallel = Orchestrator(RunConfig(workers=workers), ALL_PASSING).process("all")
        assert [s.checks[0].detail for s in serial.suites] == [s.checks[0].detail for s in parallel.suites]

    def test_seed_changes_draws(self):
        """Different seeds give different generators."""
        a = Orchestrator(RunConfig(seed=1), ALL_PASSING).process("axioms")
        b = Orchestrator(RunConfig(seed=2), ALL_PASSING).process("axioms")
        assert a.suites[0].checks[0].detail != b.suites[0].checks[0].detail


class TestOrchestratorWriteOutputs:
    """Tests for Orchestrator.write_outputs()."""

    def test_writes_json_and_csv(self, tmp_path):
        """Both files are written when configured."""
        config = RunConfig(json_path=str(tmp_path / "r.json"), csv_path=str(tmp_path / "c.csv"))
        orchestrator = Orchestrator(config, {**ALL_PASSING, "affine": affine_with_curve})
        orchestrator.write_outputs(orchestrator.process("affine"))

        report = json.loads((tmp_path / "r.json").read_text())
        assert report["command"] == "affine" and report["passed"] is True
        with open(tmp_path / "c.csv", newline="") as f:
            assert list(csv.reader(f))[0] == ["b", "distance"]

    def test_csv_skipped_without_curve(self, tmp_path):
        """No affine suite means no CSV."""
        config = RunConfig(json_path=str(tmp_path / "r.json"), csv_path=str(tmp_path / "c.csv"))
        orchestrator = Orchestrator(config, ALL_PASSING)
        orchestrator.write_outputs(orchestrator.process("jordan"))
        assert not (tmp_path / "c.csv").exists()
