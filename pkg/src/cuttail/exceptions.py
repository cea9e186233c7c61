"""Exception types shared across the package."""


class CuttailError(Exception):
    """Base class for all package-specific errors."""


class InputError(CuttailError):
    """Malformed or invalid input data (files, matrices, systems, laws)."""


class NotHurwitzError(CuttailError):
    """A computation that requires a Hurwitz matrix received a non-Hurwitz one."""


class DegenerateBasisError(CuttailError):
    """Basis functions are numerically dependent on the chosen nodes.

    Raised when a collocation system stays singular after jitter retries or
    when a linear solve exceeds the configured condition cap.
    """


class NoUpperBracketError(CuttailError):
    """Doubling failed to find an upper bracket for the critical time.

    Signals numerical breakdown: for a Hurwitz matrix with minimal degree
    at least 2 a finite critical time always exists.
    """


class EigenvalueError(CuttailError):
    """Eigenvalue computation failed; the Hurwitz test is inconclusive."""
