"""Configuration module for slpgram."""

from slpgram.config.env_loader import get_env, load_env
from slpgram.config.settings import Settings, get_settings, reset_settings

__all__ = ["load_env", "get_env", "Settings", "get_settings", "reset_settings"]
