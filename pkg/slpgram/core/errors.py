"""Exception hierarchy for slpgram."""

from typing import Optional


class SlpgramError(Exception):
    """Base class for every error raised on purpose by slpgram."""


class SlpFormatError(SlpgramError, ValueError):
    """A grammar file does not follow the SLP text format."""

    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        self.message = message
        self.line = line
        self.path = path
        super().__init__(str(self))

    def with_path(self, path: str) -> "SlpFormatError":
        return SlpFormatError(self.message, self.line, path)

    def __str__(self) -> str:
        where = self.path or "<input>"
        if self.line is not None:
            where = f"{where}:{self.line}"
        return f"{where}: {self.message}"


class SlpValidationError(SlpgramError, ValueError):
    """An in-memory grammar violates the SLP invariants."""


class LengthOverflowError(SlpValidationError):
    """A derived length reached the 2**62 cap."""

    def __init__(self, variable: int):
        self.variable = variable
        super().__init__(f"derived length of variable {variable} reaches 2**62")


class LimitExceededError(SlpgramError):
    """Decompression was refused because the text is longer than allowed."""

    def __init__(self, length: int, limit: int):
        self.length = length
        self.limit = limit
        super().__init__(f"derived length {length} exceeds limit {limit}")


class InvariantError(SlpgramError, AssertionError):
    """An internal consistency check failed; this is a bug, not bad input."""
