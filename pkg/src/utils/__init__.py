"""Shared utilities: error hierarchy and logging"""

from .errors import (
    CapacityError,
    CnfParseError,
    ConfigError,
    GraphParseError,
    HierCostError,
    UsageError,
    ValidationError,
)
from .logger import HierCostLogger, get_logger, reset_logger, set_log_level

__all__ = [
    "CapacityError",
    "CnfParseError",
    "ConfigError",
    "GraphParseError",
    "HierCostError",
    "HierCostLogger",
    "UsageError",
    "ValidationError",
    "get_logger",
    "reset_logger",
    "set_log_level",
]
