#!/usr/bin/env python3
"""
Context utilities for slpgram logging.

Commands and pipeline phases push fields such as ``q``, ``variable`` or
``command`` here; ``ContextFilter`` copies them onto every log record.
"""

import logging
import threading
from functools import wraps
from typing import Any, Dict

# Thread-local storage for context data
_context_storage = threading.local()


class LogContext:
    """Context manager for adding context information to log records."""

    def __init__(self, **context):
        self.context = context
        self.previous_context: Dict[str, Any] = {}

    def __enter__(self):
        """Save the previous context and merge in the new values."""
        self.previous_context = getattr(_context_storage, "context", {})
        new_context = self.previous_context.copy()
        new_context.update(self.context)
        _context_storage.context = new_context
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        _context_storage.context = self.previous_context

    @staticmethod
    def get_context() -> Dict[str, Any]:
        """Get a copy of the current context data."""
        return getattr(_context_storage, "context", {}).copy()

    @staticmethod
    def clear_context():
        """Clear the current context data."""
        _context_storage.context = {}


def capture_context(**context):
    """Decorator running the wrapped function inside ``LogContext(**context)``."""

    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            with LogContext(**context):
                return func(*args, **kwargs)

        return wrapper

    return decorator


class ContextFilter(logging.Filter):
    """Filter that adds the current ``LogContext`` fields to log records."""

    def filter(self, record):
        context = LogContext.get_context()
        record.context = context
        for key, value in context.items():
            setattr(record, key, value)
        return True
