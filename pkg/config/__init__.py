"""
Configuration Package

Settings, estimation limits and logging setup.
"""

from .logging import configure_logging
from .settings import ENV_PREFIX, EstimationLimits, Settings

__all__ = ["ENV_PREFIX", "EstimationLimits", "Settings", "configure_logging"]
