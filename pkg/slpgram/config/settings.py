"""Validated runtime settings for slpgram, read from the environment."""

from functools import lru_cache
from typing import Literal

from pydantic import BaseModel, Field, field_validator

from slpgram.config.env_loader import get_env

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseModel):
    """Tunables shared by the library and the CLI."""

    log_level: str = "WARNING"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    date_format: str = "%Y-%m-%d %H:%M:%S"
    structured: bool = False
    json_logs: bool = False
    expand_limit: int = Field(default=1_000_000, ge=1)
    build_method: Literal["balanced", "pairs"] = "balanced"
    check_invariants: bool = True

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown log level {value!r}, expected one of {', '.join(LOG_LEVELS)}")
        return level

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from ``SLPGRAM_*`` environment variables."""
        values = {
            "log_level": get_env("SLPGRAM_LOG_LEVEL"),
            "log_format": get_env("SLPGRAM_LOG_FORMAT"),
            "date_format": get_env("SLPGRAM_DATE_FORMAT"),
            "structured": get_env("SLPGRAM_STRUCTURED", as_type=bool),
            "json_logs": get_env("SLPGRAM_JSON_LOGS", as_type=bool),
            "expand_limit": get_env("SLPGRAM_EXPAND_LIMIT", as_type=int),
            "build_method": get_env("SLPGRAM_BUILD_METHOD"),
            "check_invariants": get_env("SLPGRAM_CHECK_INVARIANTS", as_type=bool),
        }
        return cls(**{key: value for key, value in values.items() if value is not None})


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings, loading them on first use."""
    return Settings.from_env()


def reset_settings() -> None:
    """Forget the cached settings so the next call re-reads the environment."""
    get_settings.cache_clear()
