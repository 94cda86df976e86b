"""Exception hierarchy shared by every module."""


class CellProfileError(Exception):
    """Base class for all package errors."""


class InputError(CellProfileError, ValueError):
    """Bad arguments: order mismatch, negative parameters, malformed structures."""


class ParseError(InputError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class CapacityError(CellProfileError):
    """A computation would exceed one of the fixed enumeration budgets."""


class ConsistencyError(CellProfileError, ArithmeticError):
    """An exact division left a remainder. Always indicates a bug or a non-group."""


class VerificationError(CellProfileError):
    """Two independent counting methods disagreed."""
