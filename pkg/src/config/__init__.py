"""
Configuration: shared constants and experiment settings
"""

from src.config.constants import HIERCOST_NAME, HIERCOST_VERSION
from src.config.settings import (
    EXPERIMENT_KINDS,
    EXPERIMENT_METHODS,
    ExperimentSettings,
    load_settings,
)

__all__ = [
    "EXPERIMENT_KINDS",
    "EXPERIMENT_METHODS",
    "ExperimentSettings",
    "HIERCOST_NAME",
    "HIERCOST_VERSION",
    "load_settings",
]
