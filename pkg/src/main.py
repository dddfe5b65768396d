"""Command-Line Entry Point.

A thin wrapper that parses flags, loads configuration and invokes the
orchestrator. Exit status: 0 when every check passes, 1 when a check or
suite fails, 2 on a configuration error.
"""

import argparse
import logging
import os
import sys
from collections.abc import Sequence

import yaml

from src.core.config import RunConfig, validate_config
from src.core.jordan import AlgebraKind
from src.orchestrator import Orchestrator
from src.shell.config_loader import load_config, load_config_from_env, merge_cli_overrides
from src.suites import ALL, SUITES


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def configure_logging(level: str | None = None) -> None:
    """Log to stderr; the level comes from the flag, then LOG_LEVEL, then INFO."""
    name = (level or os.environ.get("LOG_LEVEL", "INFO")).upper()
    logging.basicConfig(
        level=getattr(logging, name, logging.INFO),
        format=LOG_FORMAT,
        stream=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subcommand per suite plus "all"; flags follow the subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help="root seed (default 7)")
    common.add_argument("--tol", type=float, help="replace every built-in check tolerance")
    common.add_argument("--trials", type=int, help="random instances per property run")
    common.add_argument("--n", type=int, help="largest Hilbert-space dimension (1..8)")
    common.add_argument("--N", dest="grid_n", type=int, help="affine grid size, a power of two")
    common.add_argument("--L", dest="grid_l", type=float, help="affine grid half-width")
    common.add_argument("--json", dest="json_path", help="write the JSON report here instead of stdout")
    common.add_argument("--csv", dest="csv_path", help="write the affine (b, distance) curve here")
    common.add_argument("--algebra", choices=[k.value for k in AlgebraKind], help="Jordan family for semigroup")
    common.add_argument("--config", dest="config_path", help="YAML configuration file")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")

    parser = argparse.ArgumentParser(
        prog="stand-verify",
        description="Numerical verification of the geometry of standard subspaces.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for name in [*SUITES, ALL]:
        commands.add_parser(name, parents=[common], help=f"run the {name} suite" if name != ALL else "run every suite")
    return parser


def _load(args: argparse.Namespace) -> RunConfig:
    config = load_config(args.config_path)
    config = load_config_from_env(config)
    return merge_cli_overrides(config, args)


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, run the suites, write the report and return the exit status."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_CONFIG

    configure_logging(args.log_level)

    try:
        config = _load(args)
    except (OSError, ValueError, yaml.YAMLError) as e:
        logger.error("Configuration error: %s", e)
        return EXIT_CONFIG

    validation = validate_config(config)
    for warning in validation.warnings:
        logger.warning("Config %s: %s", warning.field, warning.message)
    if not validation.valid:
        for error in validation.critical_errors:
            logger.error("Config %s: %s", error.field, error.message)
        return EXIT_CONFIG

    orchestrator = Orchestrator(config)
    result = orchestrator.process(args.command)

    try:
        orchestrator.write_outputs(result)
    except OSError as e:
        logger.error("Could not write report: %s", e)
        return EXIT_FAILED

    for error in result.errors:
        logger.error("Error: %s", error)

    return EXIT_OK if result.success else EXIT_FAILED


def main() -> None:
    """Console-script entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
