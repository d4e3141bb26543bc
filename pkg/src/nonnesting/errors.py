"""Shared exception types."""


class ConstraintViolation(ValueError):
    """A diagram already contains a forbidden nesting."""


class DivisibilityError(ArithmeticError):
    """An exact polynomial division left a nonzero remainder.

    This is the main internal consistency check of the series solvers: the
    geometric-sum identities behind the functional equations guarantee exact
    divisibility, so a nonzero remainder means a mis-transcribed equation or
    an implementation bug.
    """


class ResourceLimitError(RuntimeError):
    """An enumeration or DP exceeded its configured budget."""

    def __init__(self, message, reached=None):
        super().__init__(message)
        self.reached = reached
