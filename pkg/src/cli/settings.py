"""
Environment settings for the command line.

All values are optional; LFV_-prefixed variables override the defaults.
"""

from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.core.constants import DEFAULT_OUTPUT_DIR


class VerificationSettings(BaseSettings):
    """Process-wide defaults read from LFV_LOG_LEVEL, LFV_OUTPUT_DIR and LFV_WORKERS."""

    model_config = SettingsConfigDict(env_prefix="LFV_", extra="ignore")

    log_level: str = Field(default="INFO", description="Loguru level of the stderr sink")
    output_dir: Path = Field(
        default=Path(DEFAULT_OUTPUT_DIR), description="Default report directory"
    )
    workers: int = Field(default=1, ge=1, description="Default process pool size")
