"""Report Writer - Imperative Shell.

Serializes suite results to the versioned JSON report and dumps the affine
(b, distance) curve as CSV. Output is byte-identical for equal seeds: keys
are sorted and no timestamps are written.
"""

import csv
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, TextIO

from src.core.codec import to_jsonable
from src.core.report import CheckResult, SuiteResult


logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
CURVE_SUITE = "affine"
CURVE_CHECK = "monotonicity"
CURVE_HEADER = ("b", "distance")


def _check_payload(check: CheckResult) -> dict[str, Any]:
    return {
        "name": check.name,
        "residual": check.residual,
        "tol": check.tol,
        "passed": check.passed,
        "detail": check.detail,
    }


def suite_payload(suite: SuiteResult) -> dict[str, Any]:
    """JSON-ready record of one suite."""
    return to_jsonable({
        "name": suite.name,
        "passed": suite.passed,
        "checks": [_check_payload(c) for c in suite.checks],
        "errors": list(suite.errors),
    })


def report_payload(command: str, seed: int, suites: Sequence[SuiteResult]) -> dict[str, Any]:
    """Assemble the versioned report.

    Args:
        command: CLI subcommand that produced the suites
        seed: Root seed of the run
        suites: Suite results in report order

    Returns:
        Dict with schema, command, seed, passed and suites
    """
    return {
        "schema": SCHEMA_VERSION,
        "command": command,
        "seed": seed,
        "passed": all(s.passed for s in suites),
        "suites": [suite_payload(s) for s in suites],
    }


def render_report(payload: dict[str, Any]) -> str:
    """Strict JSON text; non-finite floats must already be None."""
    return json.dumps(payload, indent=2, sort_keys=True, allow_nan=False) + "\n"


def write_report(
    payload: dict[str, Any],
    json_path: str | Path | None = None,
    stream: TextIO | None = None,
) -> None:
    """Write the report to json_path, or to stream (stdout) when no path is given."""
    text = render_report(payload)
    if json_path is None:
        (stream or sys.stdout).write(text)
        return
    path = Path(json_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("Wrote report to %s", path)


def extract_curve(suites: Sequence[SuiteResult]) -> list[tuple[float, float | None]]:
    """The (b, distance) pairs recorded by the affine monotonicity check, if it ran."""
    for suite in suites:
        if suite.name != CURVE_SUITE:
            continue
        for check in suite.checks:
            if check.name == CURVE_CHECK:
                return [(float(b), d) for b, d in check.detail.get("curve", [])]
    return []


def write_curve_csv(path: str | Path, curve: Sequence[tuple[float, float | None]]) -> int:
    """Write the curve with header b,distance; missing distances are left empty.

    Returns:
        Number of data rows written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(CURVE_HEADER)
        for b, distance in curve:
            writer.writerow([repr(b), "" if distance is None else repr(float(distance))])
    logger.info("Wrote %d curve rows to %s", len(curve), path)
    return len(curve)
