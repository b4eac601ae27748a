class PreconditionError(ValueError):
    """An operation was called on input outside its domain."""


class GuardExceeded(PreconditionError):
    """The input is larger than an exhaustive search is allowed to handle."""


class GridParseError(ValueError):
    """Malformed grid text document."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
