"""Orchestrator - Wires Functional Core and Imperative Shell.

This module coordinates the flow of data between the pure verification
suites and the I/O-performing shell components. It's the "glue" that
makes the application work.
"""

import logging
from collections.abc import Mapping
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from src.core.config import RunConfig
from src.core.report import SuiteResult
from src.core.sampling import child_rng
from src.shell.report_writer import extract_curve, report_payload, write_curve_csv, write_report
from src.suites import SUITES, SuiteRunner, suites_for


logger = logging.getLogger(__name__)


@dataclass
class RunResult:
    """Result of one CLI run.

    Attributes:
        command: Subcommand that was run
        seed: Root seed
        suites: Suite results in report order
        errors: Run-level errors (unknown command, output failures)
    """
    command: str
    seed: int
    suites: list[SuiteResult] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)

    @property
    def success(self) -> bool:
        """Returns True if every suite passed and no error occurred."""
        return not self.errors and all(s.passed for s in self.suites)

    @property
    def summary(self) -> str:
        """Human-readable summary of the run."""
        passed = sum(s.passed for s in self.suites)
        checks = sum(len(s.checks) for s in self.suites)
        failed = sum(len(s.failed_checks) for s in self.suites)
        return (
            f"{self.command}: {passed}/{len(self.suites)} suites passed, "
            f"{checks - failed}/{checks} checks passed"
            + (f", {len(self.errors)} errors" if self.errors else "")
        )


class Orchestrator:
    """Runs verification suites and writes their reports.

    Each suite receives its own generator derived from (seed, suite name),
    so results do not depend on the worker count or completion order.
    """

    def __init__(self, config: RunConfig, suites: Mapping[str, SuiteRunner] | None = None) -> None:
        """Initialize orchestrator with configuration.

        Args:
            config: Validated run configuration
            suites: Suite runners by name (the registered suites if not provided)
        """
        self.config = config
        self.suites = dict(SUITES if suites is None else suites)

    def _run_suite(self, name: str) -> SuiteResult:
        logger.info("Starting suite %s", name)
        try:
            result = self.suites[name](self.config, child_rng(self.config.seed, name))
        except Exception as e:
            logger.exception("Suite %s raised", name)
            return SuiteResult(name, errors=[f"{type(e).__name__}: {e}"])

        for check in result.failed_checks:
            logger.warning("%s: check %s failed (residual %.3g > tol %.3g)", name, check.name, check.residual, check.tol)
        for error in result.errors:
            logger.warning("%s: %s", name, error)
        logger.info("Finished %s", result.summary)
        return result

    def process(self, command: str) -> RunResult:
        """Run the suites named by a subcommand.

        Args:
            command: A suite name or "all"

        Returns:
            RunResult with suites in report order
        """
        try:
            names = suites_for(command)
        except KeyError:
            error_msg = f"Unknown command: {command}"
            logger.error(error_msg)
            return RunResult(command, self.config.seed, errors=[error_msg])

        names = [n for n in names if n in self.suites]
        workers = max(1, min(self.config.workers, len(names)))
        logger.info("Running %d suites with %d workers (seed %d)", len(names), workers, self.config.seed)

        with ThreadPoolExecutor(max_workers=workers) as executor:
            suites = list(executor.map(self._run_suite, names))

        result = RunResult(command, self.config.seed, suites)
        logger.info("Completed: %s", result.summary)
        return result

    def write_outputs(self, result: RunResult) -> None:
        """Write the JSON report and, if configured, the affine curve CSV."""
        write_report(report_payload(result.command, result.seed, result.suites), self.config.json_path)

        if self.config.csv_path is None:
            return
        curve = extract_curve(result.suites)
        if not curve:
            logger.warning("No affine curve in this run; %s not written", self.config.csv_path)
            return
        write_curve_csv(self.config.csv_path, curve)
