"""Tests for the command-line entry point.

Registered suites are swapped for stubs with monkeypatch.
"""

import json

import pytest

import src.suites
from src.core.report import CheckResult, SuiteResult
from src.main import EXIT_CONFIG, EXIT_FAILED, EXIT_OK, build_parser, run


def stub(name, ok=True):
    def run_suite(config, rng):
        return SuiteResult(name, [CheckResult.boolean(f"{name}-check", ok, {"seed": config.seed, "n": config.n})])
    return run_suite


@pytest.fixture(autouse=True)
def stub_suites(monkeypatch, tmp_path):
    for name in list(src.suites.SUITES):
        monkeypatch.setitem(src.suites.SUITES, name, stub(name))
    for var in ("STAND_SEED", "STAND_TOL", "STAND_N"):
        monkeypatch.delenv(var, raising=False)
    monkeypatch.setenv("CONFIG_PATH", str(tmp_path / "absent.yaml"))


class TestBuildParser:
    """Tests for build_parser()."""

    def test_flags_after_subcommand(self):
        """Short grid flags map to their config fields."""
        args = build_parser().parse_args(["affine", "--N", "1024", "--L", "10", "--csv", "c.csv"])
        assert (args.command, args.grid_n, args.grid_l, args.csv_path) == ("affine", 1024, 10.0, "c.csv")

    def test_unset_flags_are_none(self):
        """Flags not given stay None so config values survive."""
        args = build_parser().parse_args(["all"])
        assert args.seed is None and args.tol is None


class TestRun:
    """Tests for run()."""

    def test_passing_run_exits_zero(self, capsys):
        """All checks passing gives exit 0 and a report on stdout."""
        assert run(["all", "--seed", "3"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["seed"] == 3
        assert len(report["suites"]) == 7

    def test_failing_check_exits_one(self, monkeypatch, capsys):
        """A failed check gives exit 1."""
        monkeypatch.setitem(src.suites.SUITES, "jordan", stub("jordan", ok=False))
        assert run(["jordan"]) == EXIT_FAILED
        assert json.loads(capsys.readouterr().out)["passed"] is False

    def test_invalid_config_exits_two(self):
        """Out-of-range flags are configuration errors."""
        assert run(["modular", "--n", "0"]) == EXIT_CONFIG

    def test_bad_grid_exits_two(self):
        """A grid size that is not a power of two is rejected."""
        assert run(["affine", "--N", "1000"]) == EXIT_CONFIG

    def test_usage_error_exits_two(self):
        """Unknown subcommands are argparse errors."""
        assert run(["nonsense"]) == EXIT_CONFIG

    def test_bad_env_exits_two(self, monkeypatch):
        """Invalid environment values are configuration errors."""
        monkeypatch.setenv("STAND_SEED", "seven")
        assert run(["axioms"]) == EXIT_CONFIG

    def test_precedence(self, tmp_path, monkeypatch, capsys):
        """Flags beat environment, which beats the file."""
        path = tmp_path / "config.yaml"
        path.write_text("seed: 1\nn: 2\n")
        monkeypatch.setenv("STAND_SEED", "5")
        monkeypatch.setenv("STAND_N", "3")
        assert run(["axioms", "--config", str(path), "--seed", "9"]) == EXIT_OK
        detail = json.loads(capsys.readouterr().out)["suites"][0]["checks"][0]["detail"]
        assert detail == {"seed": 9, "n": 3}

    def test_json_file(self, tmp_path):
        """--json writes the report to a file."""
        path = tmp_path / "out" / "report.json"
        assert run(["bgl", "--json", str(path)]) == EXIT_OK
        assert json.loads(path.read_text())["command"] == "bgl"

    def test_invalid_yaml_exits_two(self, tmp_path):
        """A malformed config file is a configuration error."""
        path = tmp_path / "bad.yaml"
        path.write_text("seed: [1,\n")
        assert run(["axioms", "--config", str(path)]) == EXIT_CONFIG
