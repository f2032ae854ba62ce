"""
@file_name: settings.py
@author: frtlab
@date: 2025-07-02
@description: Environment driven logging settings (never affect report content)
"""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class LoggingSettings(BaseSettings):
    """Log sink settings read from FRTLAB_* variables or a local .env file"""

    model_config = SettingsConfigDict(
        env_prefix="FRTLAB_",
        env_file=".env",
        extra="ignore",
    )

    log_level: str = Field(default="INFO")
    log_dir: str = Field(default="logs")
    log_rotation: str = Field(default="10 MB")
    log_retention: str = Field(default="30 days")
    log_console: bool = Field(default=True)


def get_logging_settings() -> LoggingSettings:
    return LoggingSettings()
