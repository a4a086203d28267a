"""
Typed errors for the Weyl group and Kostant bookkeeping.

Every error raised by the library derives from WeylError, so management
commands can turn any of them into a usage error with a single except clause.
"""


class WeylError(Exception):
    """Base class for all library errors."""


class InvalidRankError(WeylError):
    """Raised when a rank n or a parabolic index k is out of range."""


class DimensionMismatchError(WeylError):
    """Raised when weights or group elements of different rank are combined."""


class ConstraintError(WeylError):
    """Raised when a value violates a structural constraint (pairs, weights, literals)."""


class PreconditionError(WeylError):
    """Raised when an operation is called outside the range where it is defined."""


class ResourceGuardError(WeylError):
    """Raised when a brute-force enumeration would exceed the configured cap."""
