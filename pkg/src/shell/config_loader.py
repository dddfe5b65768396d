"""Configuration Loader - Imperative Shell.

This module handles loading run configuration from YAML files, environment
variables and parsed command-line flags. All I/O is contained here.

The RunConfig model is defined in src/core/config.py to avoid information
leakage between layers. Precedence: defaults < YAML < environment < flags.
"""

import argparse
import dataclasses
import logging
import os
from collections.abc import Mapping
from pathlib import Path
from typing import Any

import yaml

from src.core.config import RunConfig


logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = "config/config.yaml"

_INT_KEYS = ("seed", "trials", "samples", "n", "grid_n", "budget_interior", "budget_boundary", "workers")
_FLOAT_KEYS = ("grid_l", "band")
_STR_KEYS = ("algebra", "json_path", "csv_path")

# argparse destination -> RunConfig field
CLI_FIELDS = {
    "seed": "seed",
    "tol": "tol",
    "trials": "trials",
    "n": "n",
    "grid_n": "grid_n",
    "grid_l": "grid_l",
    "json_path": "json_path",
    "csv_path": "csv_path",
    "algebra": "algebra",
}

ENV_FIELDS = {
    "STAND_SEED": ("seed", int),
    "STAND_TOL": ("tol", float),
    "STAND_N": ("n", int),
}


def _parse_tol_overrides(data: Any) -> dict[str, float]:
    """Parse the per-family tolerance table."""
    if data is None:
        return {}
    if not isinstance(data, Mapping):
        raise ValueError(f"tol_overrides must be a mapping, got {type(data).__name__}")
    return {str(family): float(value) for family, value in data.items()}


def load_config_from_dict(data: Mapping[str, Any], base: RunConfig | None = None) -> RunConfig:
    """Load configuration from a dictionary.

    Keys absent from data keep the value of base (or the RunConfig default).
    Unknown keys are logged and ignored.

    Args:
        data: Configuration dictionary
        base: Configuration to layer the values over

    Returns:
        Parsed RunConfig object

    Raises:
        ValueError: If a value cannot be converted to its field type
    """
    config = base or RunConfig()
    known = {f.name for f in dataclasses.fields(RunConfig)}
    for key in sorted(set(data) - known):
        logger.warning("Ignoring unknown config key: %s", key)

    updates: dict[str, Any] = {}
    for key in _INT_KEYS:
        if data.get(key) is not None:
            updates[key] = int(data[key])
    for key in _FLOAT_KEYS:
        if data.get(key) is not None:
            updates[key] = float(data[key])
    for key in _STR_KEYS:
        if data.get(key) is not None:
            updates[key] = str(data[key])
    if data.get("tol") is not None:
        updates["tol"] = float(data["tol"])
    if "tol_overrides" in data:
        updates["tol_overrides"] = _parse_tol_overrides(data["tol_overrides"])

    return dataclasses.replace(config, **updates)


def load_config(config_path: str | Path | None = None) -> RunConfig:
    """Load configuration from a YAML file.

    This method performs file I/O.

    Args:
        config_path: Path to YAML config file.
                    If None, uses CONFIG_PATH env var or default.

    Returns:
        Parsed RunConfig object

    Raises:
        yaml.YAMLError: If config file is invalid YAML
        ValueError: If the file holds a non-mapping or an ill-typed value
    """
    if config_path is None:
        config_path = os.environ.get("CONFIG_PATH", DEFAULT_CONFIG_PATH)

    path = Path(config_path)

    logger.info("Loading configuration from %s", path)

    if not path.exists():
        logger.warning("Config file not found: %s, using defaults", path)
        return RunConfig()

    with open(path, "r") as f:
        data = yaml.safe_load(f)

    if data is None:
        logger.warning("Config file is empty, using defaults")
        return RunConfig()

    if not isinstance(data, Mapping):
        raise ValueError(f"Config file {path} must contain a mapping")

    config = load_config_from_dict(data)

    logger.info(
        "Loaded config: seed=%d, trials=%d, n=%d, grid=%d",
        config.seed,
        config.trials,
        config.n,
        config.grid_n,
    )

    return config


def load_config_from_env(base: RunConfig | None = None) -> RunConfig:
    """Layer environment variables over a configuration.

    Environment variables:
        STAND_SEED: Root seed
        STAND_TOL: Global tolerance
        STAND_N: Dimension cap

    Returns:
        RunConfig with the set variables applied

    Raises:
        ValueError: If a variable is not a valid number
    """
    config = base or RunConfig()
    updates: dict[str, Any] = {}
    for var, (name, convert) in ENV_FIELDS.items():
        raw = os.environ.get(var)
        if raw is None or not raw.strip():
            continue
        try:
            updates[name] = convert(raw.strip())
        except ValueError as e:
            raise ValueError(f"Invalid {var}={raw!r}: {e}") from e
        logger.debug("Using %s from environment", var)
    return dataclasses.replace(config, **updates)


def merge_cli_overrides(config: RunConfig, args: argparse.Namespace) -> RunConfig:
    """Apply the command-line flags that were given.

    Flags left at None keep the configured value.

    Args:
        config: Configuration from file and environment
        args: Parsed command line

    Returns:
        RunConfig with the flags applied
    """
    updates = {
        field: getattr(args, dest)
        for dest, field in CLI_FIELDS.items()
        if getattr(args, dest, None) is not None
    }
    return dataclasses.replace(config, **updates)
