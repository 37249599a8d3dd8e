"""
Logging Management Module

Provides centralized logging functionality with support for multiple log levels,
console and file handlers, structured logging with JSON format and log rotation.

@brief Logging functionality for MorseLab
@author MorseLab Team
@version 1.0.0
@since 1.0.0
"""

from .logger_manager import ColoredFormatter, JSONFormatter, LoggerManager

__all__ = ["LoggerManager", "JSONFormatter", "ColoredFormatter"]
