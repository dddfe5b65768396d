"""End-to-end runs of each verification suite at small sizes."""

import pytest

from src.core.config import RunConfig
from src.core.sampling import child_rng
from src.shell.report_writer import render_report, report_payload
from src.suites import SUITES
from src.suites.affine import MIN_VIOLATION


SMALL = RunConfig(trials=6, samples=40, n=3)


@pytest.mark.parametrize("name", list(SUITES))
def test_suite_passes(name):
    """Every suite passes on the default seed."""
    result = SUITES[name](SMALL, child_rng(SMALL.seed, name))
    assert result.name == name
    assert result.errors == []
    assert result.checks
    assert result.passed, [(c.name, c.residual, c.detail) for c in result.failed_checks]


@pytest.mark.parametrize("name", ["modular", "jordan"])
def test_suite_is_deterministic(name):
    """Equal seeds give byte-identical reports."""
    texts = [
        render_report(report_payload(name, SMALL.seed, [SUITES[name](SMALL, child_rng(SMALL.seed, name))]))
        for _ in range(2)
    ]
    assert texts[0] == texts[1]


def test_affine_records_curve():
    """The affine suite records the (b, distance) curve for the CSV dump."""
    result = SUITES["affine"](SMALL, child_rng(SMALL.seed, "affine"))
    check = next(c for c in result.checks if c.name == "monotonicity")
    assert [b for b, _ in check.detail["curve"]] == [-1.0, -0.5, 0.0, 0.1, 0.5, 1.0]
    assert check.detail["orientation"] == 1


def test_affine_gates_violation_distance():
    """Monotonicity passes only with every b < 0 at least MIN_VIOLATION away from V."""
    result = SUITES["affine"](SMALL, child_rng(SMALL.seed, "affine"))
    check = next(c for c in result.checks if c.name == "monotonicity")
    assert check.passed
    assert check.detail["min-violation-distance"] >= MIN_VIOLATION == 1e-3


def test_semigroup_counts_follow_config():
    """Koufany words follow samples, product pairs are half of them, order pairs follow trials."""
    config = RunConfig(trials=3, samples=12, n=3, budget_interior=16, budget_boundary=4)
    result = SUITES["semigroup"](config, child_rng(config.seed, "semigroup"))
    checks = {c.name: c for c in result.checks}
    assert checks["koufany-compresses"].detail["words"] == 12
    assert checks["semigroup-closure"].detail == {"pairs": 6, "failures": 0}
    assert checks["order-agreement"].detail["pairs"] == 3


def test_semigroup_default_run_sizes():
    """Defaults give 1000 Koufany words, 500 product pairs and 200 order pairs."""
    config = RunConfig()
    assert (config.samples, config.samples // 2, config.trials) == (1000, 500, 200)
