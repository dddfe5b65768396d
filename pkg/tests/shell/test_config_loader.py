"""Tests for the configuration loader.

Uses tmp_path for YAML files and monkeypatch for environment variables.
"""

import argparse
import logging

import pytest
import yaml

from src.core.config import RunConfig
from src.shell.config_loader import (
    load_config,
    load_config_from_dict,
    load_config_from_env,
    merge_cli_overrides,
)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for var in ("CONFIG_PATH", "STAND_SEED", "STAND_TOL", "STAND_N"):
        monkeypatch.delenv(var, raising=False)


class TestLoadConfigFromDict:
    """Tests for load_config_from_dict()."""

    def test_converts_types(self):
        """Numbers given as strings are converted to the field type."""
        config = load_config_from_dict({"seed": "11", "grid_l": 10, "tol": "1e-6"})
        assert config.seed == 11
        assert config.grid_l == 10.0
        assert config.tol == 1e-6

    def test_tol_overrides(self):
        """The per-family table is read as floats."""
        config = load_config_from_dict({"tol_overrides": {"axioms": "1e-10"}})
        assert config.tol_overrides == {"axioms": 1e-10}

    def test_tol_overrides_must_be_mapping(self):
        """A list is rejected."""
        with pytest.raises(ValueError):
            load_config_from_dict({"tol_overrides": [1e-10]})

    def test_keeps_base_values(self):
        """Absent keys keep the base configuration."""
        config = load_config_from_dict({"n": 3}, base=RunConfig(seed=99))
        assert (config.seed, config.n) == (99, 3)

    def test_unknown_key_warns(self, caplog):
        """Unknown keys are logged and ignored."""
        with caplog.at_level(logging.WARNING):
            config = load_config_from_dict({"sed": 3})
        assert config == RunConfig()
        assert "Ignoring unknown config key: sed" in caplog.text

    def test_bad_value_raises(self):
        """Non-numeric numbers raise ValueError."""
        with pytest.raises(ValueError):
            load_config_from_dict({"trials": "many"})


class TestLoadConfig:
    """Tests for load_config()."""

    def test_reads_yaml(self, tmp_path):
        """Values in the file are applied."""
        path = tmp_path / "config.yaml"
        path.write_text(yaml.safe_dump({"seed": 3, "algebra": "herm", "grid_n": 1024}))
        config = load_config(path)
        assert (config.seed, config.algebra, config.grid_n) == (3, "herm", 1024)

    def test_missing_file_uses_defaults(self, tmp_path, caplog):
        """A missing file is a warning, not an error."""
        with caplog.at_level(logging.WARNING):
            config = load_config(tmp_path / "absent.yaml")
        assert config == RunConfig()
        assert "Config file not found" in caplog.text

    def test_empty_file_uses_defaults(self, tmp_path):
        """An empty file gives the defaults."""
        path = tmp_path / "empty.yaml"
        path.write_text("")
        assert load_config(path) == RunConfig()

    def test_non_mapping_raises(self, tmp_path):
        """A YAML list is not a configuration."""
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ValueError):
            load_config(path)

    def test_invalid_yaml_raises(self, tmp_path):
        """Malformed YAML propagates yaml.YAMLError."""
        path = tmp_path / "bad.yaml"
        path.write_text("seed: [1,\n")
        with pytest.raises(yaml.YAMLError):
            load_config(path)

    def test_config_path_env(self, tmp_path, monkeypatch):
        """CONFIG_PATH is used when no path is given."""
        path = tmp_path / "env.yaml"
        path.write_text("seed: 42\n")
        monkeypatch.setenv("CONFIG_PATH", str(path))
        assert load_config().seed == 42


class TestLoadConfigFromEnv:
    """Tests for load_config_from_env()."""

    def test_overrides_base(self, monkeypatch):
        """STAND_* variables replace file values."""
        monkeypatch.setenv("STAND_SEED", "5")
        monkeypatch.setenv("STAND_TOL", "1e-7")
        config = load_config_from_env(RunConfig(seed=1, n=3))
        assert (config.seed, config.tol, config.n) == (5, 1e-7, 3)

    def test_blank_is_ignored(self, monkeypatch):
        """Empty variables are treated as unset."""
        monkeypatch.setenv("STAND_N", "  ")
        assert load_config_from_env().n == RunConfig().n

    def test_invalid_value_raises(self, monkeypatch):
        """A non-numeric value names the variable."""
        monkeypatch.setenv("STAND_N", "four")
        with pytest.raises(ValueError, match="STAND_N"):
            load_config_from_env()


class TestMergeCliOverrides:
    """Tests for merge_cli_overrides()."""

    def test_only_given_flags_apply(self):
        """None flags keep the configured value."""
        args = argparse.Namespace(seed=9, tol=None, trials=None, n=None, grid_n=256,
                                  grid_l=None, json_path="out.json", csv_path=None, algebra=None)
        config = merge_cli_overrides(RunConfig(seed=1, trials=50), args)
        assert (config.seed, config.trials, config.grid_n, config.json_path) == (9, 50, 256, "out.json")

    def test_missing_attributes_are_skipped(self):
        """A namespace without a flag leaves the field alone."""
        assert merge_cli_overrides(RunConfig(n=2), argparse.Namespace()).n == 2
