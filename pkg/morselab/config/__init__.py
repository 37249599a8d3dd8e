"""
Configuration Management Module

Provides centralized configuration management with support for YAML configuration
files, environment variables, default configurations and the validated RunConfig.

@brief Configuration management functionality for MorseLab
@author MorseLab Team
@version 1.0.0
@since 1.0.0
"""

from .config_manager import CONFIG_PATH_ENV, ENV_MAPPINGS, ConfigManager
from .run_config import COMPAT_MODES, HEIGHT_ORDERS, OUTPUT_FORMATS, SBU_MODES, RunConfig

__all__ = [
    "ConfigManager",
    "RunConfig",
    "CONFIG_PATH_ENV",
    "ENV_MAPPINGS",
    "COMPAT_MODES",
    "SBU_MODES",
    "OUTPUT_FORMATS",
    "HEIGHT_ORDERS",
]
