"""Decorators for slpgram."""

from slpgram.decorators.error_handling import log_errors

__all__ = ["log_errors"]
