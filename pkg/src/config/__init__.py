"""
Configuration module for tgraph-lab.
Loads settings directly from pyproject.toml.
"""

from .settings import (
    MAX_ELEMENTS_ENV,
    Settings,
    SweepDefaults,
    build_settings,
    get_settings,
    load_config_from_pyproject,
    reset_settings,
)

__all__ = [
    "MAX_ELEMENTS_ENV",
    "Settings",
    "SweepDefaults",
    "build_settings",
    "get_settings",
    "load_config_from_pyproject",
    "reset_settings",
]
