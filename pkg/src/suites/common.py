"""Helpers shared by the verification suites."""

import logging
import math
from collections.abc import Callable, Iterable

from src.core.errors import StandardSubspaceError
from src.core.report import AxiomReport, CheckResult, SuiteResult


logger = logging.getLogger(__name__)

CheckBody = Callable[[], CheckResult | AxiomReport]


def add_check(suite: SuiteResult, name: str, body: CheckBody) -> CheckResult:
    """Run one check and append its result.

    Domain errors become a failed check carrying the error text; any other
    exception propagates to the orchestrator.
    """
    try:
        outcome = body()
        check = CheckResult.from_report(name, outcome) if isinstance(outcome, AxiomReport) else outcome
    except StandardSubspaceError as e:
        logger.debug("check %s raised %s", name, type(e).__name__)
        check = CheckResult(name, math.inf, 0.0, {"error": f"{type(e).__name__}: {e}"})
    suite.checks.append(check)
    return check


def residual_check(name: str, residuals: Iterable[float], tol: float, /, **detail: object) -> CheckResult:
    """CheckResult for the largest of several residuals (nan counts as failure)."""
    values = list(residuals)
    worst = max(values, default=0.0)
    if any(math.isnan(v) for v in values):
        worst = math.inf
    return CheckResult(name, worst, tol, {"count": len(values), **detail})
