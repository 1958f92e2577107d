"""Utility functions and classes for slpgram."""

from slpgram.utils.context import ContextFilter, LogContext, capture_context

__all__ = ["LogContext", "capture_context", "ContextFilter"]
