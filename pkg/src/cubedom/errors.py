"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A dimension, code parameter, or argument is out of its allowed range."""


class ExplicitSetTooLarge(ParameterError):
    """An explicit 2^n-element structure was requested above the n_max cap."""


class PreconditionError(ValueError):
    """An input set does not satisfy the property an operation requires."""


class IntegrityError(RuntimeError):
    """An internal consistency check failed. Indicates a bug, never bad input."""


class FormatError(ValueError):
    """A set or tree file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
