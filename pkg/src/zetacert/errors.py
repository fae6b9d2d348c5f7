"""Exception types shared across the package."""

from __future__ import annotations


class ZetaError(Exception):
    """Base class for all errors raised by zetacert."""


class ZetaDomainError(ZetaError, ValueError):
    """A precondition failed: pole, parity, primitivity or argument domain."""


class PrecisionInfeasible(ZetaError, ArithmeticError):
    """The requested accuracy cannot be certified in binary64 arithmetic."""
