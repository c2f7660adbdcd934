"""
Settings

Runtime configuration with defaults, ``.env`` loading and ``DETSYNTH_``
environment overrides. Library code receives limits explicitly; only the CLI
and scripts read the environment.
"""

import logging
import os
from typing import Any, Dict, Mapping, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

ENV_PREFIX = "DETSYNTH_"


class EstimationLimits(BaseModel):
    """Size caps applied while building synchronizers and enumerating sequences"""
    max_component_length: int = Field(32, ge=1, description="Per-site sequence length cap (kappa_i)")
    max_synchronizer_nodes: int = Field(200_000, ge=1, description="Node cap for any built synchronizer")
    max_to_sequences: int = Field(100_000, ge=1, description="Output cap for the oracle's TO-sequence enumeration")
    audit: bool = Field(False, description="Run the monotonicity audit after every construction")


class Settings(BaseModel):
    """CLI and script configuration"""
    log_level: str = Field("INFO", description="Root log level")
    log_json: bool = Field(False, description="Render log records as JSON")
    workers: int = Field(1, ge=1, description="Process pool size for simulate")
    limits: EstimationLimits = Field(default_factory=EstimationLimits)

    # Default input paths and options, each overridable by a CLI flag
    plant: Optional[str] = None
    erm: Optional[str] = None
    si: Optional[str] = None
    init: Optional[str] = None
    mode: Optional[str] = None
    method: Optional[str] = None
    out: Optional[str] = None

    @classmethod
    def from_env(cls, env_file: Optional[str] = ".env", environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """Defaults, then ``.env``, then process environment"""
        if environ is None:
            if env_file and os.path.exists(env_file):
                load_dotenv(env_file, override=False)
            environ = os.environ

        values: Dict[str, Any] = {}
        limit_values: Dict[str, Any] = {}
        for name in cls.model_fields:
            if name == "limits":
                continue
            raw = environ.get(f"{ENV_PREFIX}{name.upper()}")
            if raw is not None:
                values[name] = raw
        for name in EstimationLimits.model_fields:
            raw = environ.get(f"{ENV_PREFIX}{name.upper()}")
            if raw is not None:
                limit_values[name] = raw
        if limit_values:
            values["limits"] = EstimationLimits(**limit_values)

        settings = cls(**values)
        if values:
            logger.debug(f"Settings overridden from environment: {sorted(values)}")
        return settings
