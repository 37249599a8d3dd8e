"""
Configuration Manager for MorseLab

Provides centralized configuration management with support for:
- YAML configuration files
- Environment variables
- Default configurations
- Configuration validation
"""

import os
from typing import Any

import yaml

from ..exceptions import ConfigFileNotFoundError, ConfigurationError

ENV_MAPPINGS = {
    "MORSELAB_MIN_RANK": "harness.min_rank",
    "MORSELAB_MAX_RANK": "harness.max_rank",
    "MORSELAB_MAX_VERTICES": "harness.max_vertices",
    "MORSELAB_SIGMA_MAX_N": "harness.sigma_max_n",
    "MORSELAB_WORKERS": "harness.workers",
    "MORSELAB_SEED": "harness.seed",
    "MORSELAB_COMPAT": "partitions.compat",
    "MORSELAB_SBU_MODE": "partitions.sbu_mode",
    "MORSELAB_HEIGHT_ORDER": "graph.height_order",
    "MORSELAB_MAX_POSET_ELEMENTS": "harness.max_poset_elements",
    "MORSELAB_OUTPUT": "output.format",
    "LOG_LEVEL": "logging.level",
    "LOG_FILE": "logging.file",
    "LOG_FORMAT": "logging.format",
}

# Environment variable naming the default configuration file for the CLI.
CONFIG_PATH_ENV = "MORSELAB_CONFIG"


class ConfigManager:
    """
    Centralized configuration management for MorseLab.

    Supports multiple configuration sources with priority order:
    1. Environment variables
    2. Configuration files
    3. Default values
    """

    def __init__(self, config_file: str | None = None):
        """
        Initialize the configuration manager.

        @brief Initialize configuration manager with file and environment variable support.
        @param config_file Path to YAML configuration file
        """
        self._config: dict[str, Any] = {}
        self._config_file = config_file

        self._load_config()

    def _load_config(self) -> None:
        """
        Load configuration from file and environment variables. Only fail if config_file is
        provided and missing or unparseable.
        """
        if self._config_file:
            if not os.path.exists(self._config_file):
                raise ConfigFileNotFoundError(
                    f"Configuration file '{self._config_file}' not found.",
                    details={"path": self._config_file},
                )
            try:
                with open(self._config_file, encoding="utf-8") as file:
                    self._config = yaml.safe_load(file) or {}
            except yaml.YAMLError as e:
                raise ConfigurationError(
                    f"Configuration file '{self._config_file}' is not valid YAML",
                    details={"original_error": str(e)},
                ) from e
            if not isinstance(self._config, dict):
                raise ConfigurationError(
                    f"Configuration file '{self._config_file}' must contain a mapping"
                )
        self._load_from_env()

    def _load_from_env(self) -> None:
        """
        Load configuration from environment variables.

        @brief Load configuration values from environment variables.
        """
        for env_var, config_path in ENV_MAPPINGS.items():
            value = os.getenv(env_var)
            if value is not None:
                self._set_nested_value(config_path, value)

    def _set_nested_value(self, path: str, value: Any) -> None:
        """
        Set a nested configuration value using dot notation.

        @brief Set configuration value using dot notation path.
        @param path Dot-separated path to configuration value
        @param value Value to set
        """
        keys = path.split(".")
        current = self._config

        for key in keys[:-1]:
            if key not in current or not isinstance(current[key], dict):
                current[key] = {}
            current = current[key]

        # Convert string values to appropriate types
        if isinstance(value, str):
            if value.lower() in ("true", "false"):
                value = value.lower() == "true"
            elif value.isdigit():
                value = int(value)
            elif value.replace(".", "", 1).isdigit():
                value = float(value)

        current[keys[-1]] = value

    def get(self, key: str, default: Any = None, required: bool = False) -> Any:
        """
        Get a configuration value using dot notation. If required and missing, raise
        ConfigurationError.
        """
        keys = key.split(".")
        current = self._config
        try:
            for key_part in keys:
                current = current[key_part]
            if current is None and required:
                raise KeyError(key)
            return current
        except (KeyError, TypeError):
            if required:
                raise ConfigurationError(f"Required config key '{key}' is missing.") from None
            return default

    def set(self, key: str, value: Any) -> None:
        """
        Set a configuration value using dot notation.

        @brief Set configuration value by key path.
        @param key Configuration key (e.g., 'harness.max_vertices')
        @param value Value to set
        """
        self._set_nested_value(key, value)

    def _section(self, section: str, defaults: dict[str, Any]) -> dict[str, Any]:
        return {key: self.get(f"{section}.{key}", default) for key, default in defaults.items()}

    def get_graph_config(self) -> dict[str, Any]:
        """
        Get graph construction configuration with defaults.

        @brief Graph validity knobs and height comparison order.
        @return Graph configuration dictionary
        """
        return self._section("graph", {"min_basepoint_degree": 1, "height_order": "relative"})

    def get_partition_config(self) -> dict[str, Any]:
        """
        Get partition complex configuration with defaults.

        @brief Compatibility and SBU modes.
        @return Partition configuration dictionary
        """
        return self._section("partitions", {"compat": "paper", "sbu_mode": "strict"})

    def get_harness_config(self) -> dict[str, Any]:
        """
        Get verification harness configuration with defaults.

        @brief Enumeration bounds, caps and parallelism.
        @return Harness configuration dictionary
        """
        return self._section(
            "harness",
            {
                "min_rank": 1,
                "max_rank": 3,
                "max_vertices": 4,
                "sigma_max_n": 6,
                "max_partitions_per_vertex": 2,
                "max_blowup_degree": 6,
                "max_join_simplices": 20000,
                "max_poset_elements": 5000,
                "workers": 1,
                "seed": 0,
            },
        )

    def get_output_config(self) -> dict[str, Any]:
        """
        Get output configuration with defaults.

        @brief Output format.
        @return Output configuration dictionary
        """
        return self._section("output", {"format": "json"})

    def get_logging_config(self) -> dict[str, Any]:
        """
        Get logging configuration with defaults.

        @brief Get logging configuration with default values if not specified.
        @return Logging configuration dictionary
        """
        return self._section(
            "logging",
            {
                "level": "WARNING",
                "file": None,
                "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
                "max_size": 10485760,
                "backup_count": 5,
                "dir": "log",
                "colored": True,
                "json_format": True,
                "console": True,
            },
        )
