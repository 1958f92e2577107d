"""Core functionality for slpgram."""

from slpgram.core.logger import get_logger, setup_logging

__all__ = ["get_logger", "setup_logging"]
