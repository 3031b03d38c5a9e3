"""Exception types raised by cmrate."""


class CmrateError(Exception):
    """Base class for all errors raised by this package."""


class CardinalityError(CmrateError, ValueError):
    """Constellation size is not supported (too small, too large, or not square for QAM)."""


class DomainError(CmrateError, ValueError):
    """An argument lies outside the domain of the computation (e.g. SNR <= 0)."""


class NumericalError(CmrateError, ArithmeticError):
    """A numerical routine produced non-finite or inconsistent values."""


class ConvergenceError(CmrateError, RuntimeError):
    """An iterative solver did not reach its tolerance."""
