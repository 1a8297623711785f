class NestradError(Exception):
    """Base class for all errors raised by nestrad."""


class DomainError(NestradError, ValueError):
    """An argument lies outside the domain of an operation."""


class BranchError(DomainError):
    """An even root of a negative value was requested."""


class ResourceError(NestradError):
    """A configured bound (dimension, precision, search size, ...) was exceeded."""


class StateError(NestradError):
    """An operation was applied to a record in the wrong state."""


class ParseError(NestradError, ValueError):
    """Syntax error in an expression, with the 0-based offset where it was detected."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")

    def pointer(self) -> str:
        """Two-line rendering of the text with a caret under the failing position."""
        return f"{self.text}\n{' ' * self.position}^"


class NotFlattenableError(NestradError, ValueError):
    """A nested root below the top level cannot be folded into a single element."""

    def __init__(self, subtree: str):
        self.subtree = subtree
        super().__init__(f"nested root cannot be flattened: {subtree}")


class CorpusError(NestradError):
    """A corpus line is malformed."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")
