"""Verification results - Pure data.

Harnesses never raise on a law failure; they return these records, which
the shell serializes and the CLI turns into an exit code.
"""

import math
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of a sampled law check.

    Attributes:
        law: Name of the checked law family, e.g. "reflection[affine R2]"
        samples: Number of sampled tuples
        max_residual: Largest residual over all sub-laws (inf if any sample failed)
        tol: Pass threshold
        residuals: Largest residual per sub-law
        failures: Precondition failures met while sampling
        fixed_points: Sampled non-trivial fixed points y = x•y (reflection laws only)
    """
    law: str
    samples: int
    max_residual: float
    tol: float
    residuals: dict[str, float] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    fixed_points: int = 0

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tol

    @classmethod
    def build(
        cls,
        law: str,
        samples: int,
        residuals: dict[str, float],
        tol: float,
        failures: list[str] | None = None,
        fixed_points: int = 0,
    ) -> "AxiomReport":
        """Assemble a report; any failure forces max_residual to inf."""
        failures = failures or []
        worst = max(residuals.values(), default=0.0)
        if failures or any(math.isnan(r) for r in residuals.values()):
            worst = math.inf
        return cls(law, samples, worst, tol, dict(residuals), list(failures), fixed_points)


@dataclass(frozen=True)
class CheckResult:
    """One named check inside a suite.

    Attributes:
        name: Check identifier
        residual: Measured residual (inf when the check could not run)
        tol: Pass threshold
        detail: Free-form extra values for the JSON report
    """
    name: str
    residual: float
    tol: float
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.residual <= self.tol

    @classmethod
    def from_report(cls, name: str, report: AxiomReport) -> "CheckResult":
        detail: dict[str, Any] = {"law": report.law, "samples": report.samples, "residuals": report.residuals}
        if report.failures:
            detail["failures"] = report.failures[:10]
        if report.fixed_points:
            detail["fixed_points"] = report.fixed_points
        return cls(name, report.max_residual, report.tol, detail)

    @classmethod
    def boolean(cls, name: str, ok: bool, detail: dict[str, Any] | None = None) -> "CheckResult":
        """A yes/no check, encoded as residual 0 (pass) or inf (fail)."""
        return cls(name, 0.0 if ok else math.inf, 0.0, detail or {})


@dataclass
class SuiteResult:
    """Result of one verification suite.

    Attributes:
        name: Suite name (matches the CLI subcommand)
        checks: Checks in execution order
        errors: Unexpected errors raised while the suite ran
    """
    name: str
    checks: list[CheckResult] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.errors and all(c.passed for c in self.checks)

    @property
    def failed_checks(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    @property
    def summary(self) -> str:
        """Human-readable summary of the suite."""
        return (
            f"{self.name}: {len(self.checks) - len(self.failed_checks)}/{len(self.checks)} checks passed"
            + (f", {len(self.errors)} errors" if self.errors else "")
        )
