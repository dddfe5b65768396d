"""Tests for verification result records.

Tests src/core/report.py.
"""

import math

from src.core.report import AxiomReport, CheckResult, SuiteResult


class TestAxiomReport:
    """Tests for AxiomReport.build()."""

    def test_worst_residual(self):
        """max_residual is the largest sub-law residual."""
        report = AxiomReport.build("law", 10, {"a": 1e-12, "b": 3e-11}, 1e-10)
        assert report.max_residual == 3e-11
        assert report.passed

    def test_failures_force_inf(self):
        """A precondition failure fails the report."""
        report = AxiomReport.build("law", 10, {"a": 0.0}, 1e-10, failures=["singular"])
        assert report.max_residual == math.inf
        assert not report.passed

    def test_nan_forces_inf(self):
        """A nan residual fails the report."""
        assert AxiomReport.build("law", 1, {"a": math.nan}, 1.0).max_residual == math.inf

    def test_empty_residuals_pass(self):
        """No sub-laws means residual 0."""
        assert AxiomReport.build("law", 0, {}, 0.0).passed


class TestCheckResult:
    """Tests for CheckResult."""

    def test_boolean(self):
        """Boolean checks encode pass as 0 and fail as inf."""
        assert CheckResult.boolean("x", True).passed
        failed = CheckResult.boolean("x", False, {"why": 1})
        assert failed.residual == math.inf
        assert failed.detail == {"why": 1}

    def test_from_report_truncates_failures(self):
        """At most ten failures reach the detail."""
        report = AxiomReport.build("law", 3, {"a": 0.0}, 1e-9, failures=[str(i) for i in range(25)], fixed_points=2)
        check = CheckResult.from_report("reflection", report)
        assert len(check.detail["failures"]) == 10
        assert check.detail["fixed_points"] == 2
        assert not check.passed


class TestSuiteResult:
    """Tests for SuiteResult."""

    def test_passed_requires_no_errors(self):
        """An error fails the suite even with passing checks."""
        suite = SuiteResult("s", [CheckResult.boolean("a", True)], ["boom"])
        assert not suite.passed

    def test_summary(self):
        """Summary counts passing checks and errors."""
        suite = SuiteResult("s", [CheckResult.boolean("a", True), CheckResult.boolean("b", False)], ["boom"])
        assert [c.name for c in suite.failed_checks] == ["b"]
        assert suite.summary == "s: 1/2 checks passed, 1 errors"
