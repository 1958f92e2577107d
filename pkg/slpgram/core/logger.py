#!/usr/bin/env python3
"""
Logging setup for slpgram.

Supports plain stdlib logging, JSON lines, rich console output and
structlog-based structured logging. Everything goes to stderr so that SLP
and TSV output on stdout stays machine readable.
"""

import json
import logging
import sys
import time
from functools import wraps
from typing import Optional, Union

import structlog

# Try to import rich for enhanced console output
try:
    from rich.console import Console
    from rich.logging import RichHandler

    RICH_AVAILABLE = True
except ImportError:
    RICH_AVAILABLE = False

from slpgram.config.settings import get_settings
from slpgram.utils.context import ContextFilter

LOG_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}

# Attributes every LogRecord carries; anything else is treated as context
_RESERVED_ATTRS = frozenset(
    logging.LogRecord("", 0, "", 0, "", None, None).__dict__.keys() | {"message", "asctime", "context"}
)


class JSONFormatter(logging.Formatter):
    """Formatter that renders each record as one JSON object."""

    def format(self, record):
        log_data = {
            "timestamp": self.formatTime(record, self.datefmt),
            "name": record.name,
            "level": record.levelname,
            "message": record.getMessage(),
            "module": record.module,
        }
        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        for key, value in record.__dict__.items():
            if key not in _RESERVED_ATTRS and not key.startswith("_"):
                log_data[key] = value

        return json.dumps(log_data, default=str)


def _configure_structlog():
    """Configure structlog for structured logging."""
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            structlog.processors.JSONRenderer(),
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def _resolve_level(level: Optional[Union[str, int]]) -> int:
    if level is None:
        level = get_settings().log_level
    if isinstance(level, str):
        return LOG_LEVELS.get(level.upper(), logging.WARNING)
    return level


def _console_handler(rich_logging: Optional[bool], json_format: bool) -> logging.Handler:
    settings = get_settings()
    if json_format:
        handler: logging.Handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(JSONFormatter(datefmt=settings.date_format))
        return handler

    if rich_logging is None:
        rich_logging = RICH_AVAILABLE
    if rich_logging and RICH_AVAILABLE:
        return RichHandler(console=Console(stderr=True), rich_tracebacks=True, show_path=False)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(settings.log_format, settings.date_format))
    return handler


def setup_logging(
    name: Optional[str] = None,
    level: Optional[Union[str, int]] = None,
    console: bool = True,
    json_format: Optional[bool] = None,
    rich_logging: Optional[bool] = None,
    structured: Optional[bool] = None,
) -> Union[logging.Logger, structlog.stdlib.BoundLogger]:
    """
    Set up logging with the specified configuration.

    Args:
        name: Logger name (default: root logger)
        level: Log level (default: from SLPGRAM_LOG_LEVEL)
        console: Whether to attach a stderr handler
        json_format: Whether to render records as JSON (default: from SLPGRAM_JSON_LOGS)
        rich_logging: Whether to use rich formatting (default: auto-detect)
        structured: Whether to return a structlog logger (default: from SLPGRAM_STRUCTURED)

    Returns:
        Logger object configured according to the specified parameters
    """
    settings = get_settings()
    if structured is None:
        structured = settings.structured
    if json_format is None:
        json_format = settings.json_logs

    logger = logging.getLogger(name)
    logger.setLevel(_resolve_level(level))
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)

    if console:
        # structlog renders JSON itself; the handler only has to emit the line
        if structured:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(logging.Formatter("%(message)s"))
        else:
            handler = _console_handler(rich_logging, json_format)
        # records from child loggers skip the parent's filters but not its handlers' filters
        handler.addFilter(ContextFilter())
        logger.addHandler(handler)

    if structured:
        _configure_structlog()
        return structlog.get_logger(name)
    return logger


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Get a named logger below the ``slpgram`` hierarchy.

    Handlers live on the ``slpgram`` logger set up by the CLI; library
    modules only ever ask for children of it.

    Args:
        name: Logger name (default: calling module name)

    Returns:
        Logger object
    """
    if name is None:
        frame = sys._getframe(1)
        name = frame.f_globals.get("__name__", "slpgram")
    return logging.getLogger(name)


def log_execution_time(logger: Optional[logging.Logger] = None, level: str = "DEBUG"):
    """
    Decorator to log the execution time of a function.

    Args:
        logger: Logger to use (default: a logger named after the function's module)
        level: Log level to use (default: DEBUG)

    Returns:
        Decorated function
    """

    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            nonlocal logger
            if logger is None:
                logger = get_logger(func.__module__)
            log_level = LOG_LEVELS.get(level.upper(), logging.DEBUG)

            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                elapsed = time.perf_counter() - start_time
                logger.debug(f"{func.__name__} failed after {elapsed:.4f} seconds: {e}")
                raise
            elapsed = time.perf_counter() - start_time
            logger.log(
                log_level,
                f"Finished {func.__name__} in {elapsed:.4f} seconds",
                extra={"duration_seconds": elapsed},
            )
            return result

        return wrapper

    return decorator
