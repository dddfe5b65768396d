"""Imperative Shell - I/O and side effects.

This module contains all code that touches files and the environment:
- Configuration loading (YAML, environment variables, CLI flags)
- JSON report and CSV curve writing

Keep this layer thin and simple. All numerical logic should be in core.
"""

from src.shell.config_loader import (
    load_config,
    load_config_from_dict,
    load_config_from_env,
    merge_cli_overrides,
)
from src.shell.report_writer import (
    extract_curve,
    report_payload,
    write_curve_csv,
    write_report,
)

# RunConfig is a core model, re-exported here for convenience
from src.core.config import RunConfig

__all__ = [
    "load_config",
    "load_config_from_dict",
    "load_config_from_env",
    "merge_cli_overrides",
    "extract_curve",
    "report_payload",
    "write_curve_csv",
    "write_report",
    "RunConfig",
]
