"""Exception types raised across the package."""


class LieCocycleError(Exception):
    """Base class for all package errors."""


class DimensionError(LieCocycleError, ValueError):
    """An argument does not conform to the dimension of its algebra."""


class InvalidAlgebraError(LieCocycleError, ValueError):
    """Structure constants (or a representation) violate their invariants."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class NotACocycleError(LieCocycleError, ValueError):
    """A two-cochain fails the Chevalley-Eilenberg cocycle condition."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class CocycleMismatchError(LieCocycleError, ValueError):
    """Two objects that must share a cocycle carry different ones."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class NotIdentityWordError(LieCocycleError, ValueError):
    """A word declared to represent the identity does not."""

    def __init__(self, message: str, rep_residual: float, ad_residual: float):
        super().__init__(message)
        self.rep_residual = rep_residual
        self.ad_residual = ad_residual


class InputError(LieCocycleError, ValueError):
    """Malformed JSON input; names the file and the offending field."""

    def __init__(self, path: str, field: str, message: str):
        super().__init__(f"{path}: field {field!r}: {message}")
        self.path = path
        self.field = field
