"""Tests for the JSON report and CSV curve writer.

Uses tmp_path for output files.
"""

import csv
import io
import json
import math

import pytest

from src.core.report import CheckResult, SuiteResult
from src.shell.report_writer import (
    extract_curve,
    render_report,
    report_payload,
    write_curve_csv,
    write_report,
)


def make_suites():
    affine = SuiteResult("affine", [
        CheckResult("borchers", 1e-12, 1e-9),
        CheckResult.boolean("monotonicity", True, {"curve": [[-1.0, 0.5], [0.0, 1e-12], [1.0, math.nan]]}),
    ])
    axioms = SuiteResult("axioms", [CheckResult.boolean("reflection", False)], ["ValueError: boom"])
    return [axioms, affine]


class TestReportPayload:
    """Tests for report_payload()."""

    def test_top_level_fields(self):
        """Schema, command, seed and overall pass flag are recorded."""
        payload = report_payload("all", 7, make_suites())
        assert payload["schema"] == 1
        assert payload["command"] == "all"
        assert payload["seed"] == 7
        assert payload["passed"] is False

    def test_infinite_residual_becomes_null(self):
        """Failed boolean checks have residual null."""
        payload = report_payload("axioms", 7, make_suites()[:1])
        check = payload["suites"][0]["checks"][0]
        assert check["residual"] is None
        assert check["passed"] is False
        assert payload["suites"][0]["errors"] == ["ValueError: boom"]

    def test_render_is_strict_and_sorted(self):
        """Rendering is deterministic strict JSON."""
        text = render_report(report_payload("all", 7, make_suites()))
        assert text == render_report(report_payload("all", 7, make_suites()))
        assert "NaN" not in text and "Infinity" not in text
        assert list(json.loads(text)) == ["command", "passed", "schema", "seed", "suites"]


class TestWriteReport:
    """Tests for write_report()."""

    def test_writes_stream_without_path(self):
        """No path writes to the given stream."""
        stream = io.StringIO()
        write_report({"schema": 1}, stream=stream)
        assert json.loads(stream.getvalue()) == {"schema": 1}

    def test_creates_parent_directories(self, tmp_path):
        """Nested output paths are created."""
        path = tmp_path / "out" / "report.json"
        write_report({"schema": 1}, path)
        assert json.loads(path.read_text()) == {"schema": 1}

    def test_rejects_nan(self):
        """Unencoded nan is a programming error."""
        with pytest.raises(ValueError):
            write_report({"x": math.nan}, stream=io.StringIO())


class TestCurve:
    """Tests for extract_curve() and write_curve_csv()."""

    def test_extracts_affine_curve(self):
        """The curve comes from the affine monotonicity check."""
        curve = extract_curve(make_suites())
        assert [b for b, _ in curve] == [-1.0, 0.0, 1.0]

    def test_no_affine_suite(self):
        """Without the affine suite there is no curve."""
        assert extract_curve(make_suites()[:1]) == []

    def test_csv_layout(self, tmp_path):
        """Header b,distance; missing distances are empty cells."""
        path = tmp_path / "curve.csv"
        rows = write_curve_csv(path, [(-1.0, 0.5), (1.0, None)])
        assert rows == 2
        with open(path, newline="") as f:
            assert list(csv.reader(f)) == [["b", "distance"], ["-1.0", "0.5"], ["1.0", ""]]
