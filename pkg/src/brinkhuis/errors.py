"""Exception types shared across the package."""


class BrinkhuisError(Exception):
    """Base class for all package-specific errors."""


class LengthTooSmall(BrinkhuisError):
    """Grimm-class operations need n >= 12 so prefix and suffix cannot overlap."""


class NotSquarefree(BrinkhuisError):
    """An operation requiring a squarefree input received one with a square."""


class PreconditionViolated(BrinkhuisError):
    """Inputs break a documented precondition (lengths, squarefreeness, distinctness)."""


class InvalidSymbol(BrinkhuisError):
    """A character outside {0,1,2} (plus ignorable whitespace) was encountered."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class EmptyFile(BrinkhuisError):
    """A word file contained no words."""


class DomainError(BrinkhuisError):
    """Numeric arguments outside the defined domain (e.g. n < 2 for bounds)."""


class IndexOutOfRange(BrinkhuisError):
    """A vertex index does not address a vertex of the instance."""


class ResourceLimitExceeded(BrinkhuisError):
    """Refusing an exponentially large materialization without a streaming sink."""
