"""Error handling decorators for slpgram.

This module provides a decorator that logs exceptions together with the
call's arguments and the active ``LogContext`` before passing them on.
"""

import functools
import inspect
import traceback
from typing import Any, Callable, Dict, TypeVar, cast

from slpgram.core.logger import LOG_LEVELS, get_logger
from slpgram.utils.context import LogContext

# Type for decorated functions
F = TypeVar("F", bound=Callable[..., Any])

logger = get_logger(__name__)


def _describe(value: Any, max_length: int) -> str:
    text = repr(value) if isinstance(value, (bytes, bytearray)) else str(value)
    if len(text) > max_length:
        text = text[:max_length] + "..."
    return text


def log_errors(
    reraise: bool = True,
    log_level: str = "ERROR",
    include_traceback: bool = True,
    include_args: bool = True,
    max_arg_length: int = 200,
) -> Callable[[F], F]:
    """Decorator to log errors that occur in the decorated function.

    Args:
        reraise: Whether to re-raise the exception after logging
        log_level: The log level to use for error messages
        include_traceback: Whether to include the traceback in the log record
        include_args: Whether to include function arguments in the log record
        max_arg_length: Maximum length for argument values in the log record

    Returns:
        Callable: Decorator function
    """

    def decorator(func: F) -> F:
        signature = inspect.signature(func)

        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            context: Dict[str, Any] = {"function": func.__name__}
            if include_args:
                bound = signature.bind_partial(*args, **kwargs)
                for name, value in bound.arguments.items():
                    context[f"arg_{name}"] = _describe(value, max_arg_length)

            with LogContext(**context):
                try:
                    return func(*args, **kwargs)
                except Exception as e:
                    extra = {"error_type": type(e).__name__, "error_message": str(e)}
                    if include_traceback:
                        extra["traceback"] = traceback.format_exc()
                    logger.log(
                        LOG_LEVELS.get(log_level.upper(), 40),
                        f"Exception in {func.__name__}: {type(e).__name__}: {e}",
                        extra=extra,
                    )
                    if reraise:
                        raise
                    return None

        return cast(F, wrapper)

    return decorator
