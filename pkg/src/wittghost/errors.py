"""Exception types shared across the package."""
from __future__ import annotations



class WittGhostError(Exception):
    """Base class for all package errors."""


class DomainError(WittGhostError, ValueError):
    """An input violates an operation's precondition."""


class Unsupported(WittGhostError, NotImplementedError):
    """The request is well posed but outside what is implemented (e.g. ramified primes)."""


class Indeterminate(WittGhostError):
    """The finite window is too short to decide the question."""


class NotHyperbolicAtLevel(DomainError):
    def __init__(self, level: int):
        self.level = level
        super().__init__(f"det(I - M^n) = 0 at n = {level}")


class InvariantViolation(WittGhostError, AssertionError):
    """An invariant that must always hold failed; this signals a bug, not bad data."""


class HypothesisNotMet(DomainError):
    """A conditional check was asked for but its hypothesis fails on the data."""

    def __init__(self, message: str, index: int | None = None):
        self.index = index
        super().__init__(message)


class NotRationalSpectrum(WittGhostError):
    """The recurrence polynomial has an irreducible factor of degree >= 2 over Q."""

    def __init__(self, residual: list, recurrence=None):
        self.residual = residual
        self.recurrence = recurrence
        super().__init__(f"irreducible non-linear factor with coefficients {[str(c) for c in residual]}")


class NotCyclotomic(WittGhostError):
    """No finite cyclotomic product with the requested period reproduces the ghost."""

    def __init__(self, reason: str, index: int | None = None):
        self.reason = reason
        self.index = index
        super().__init__(reason if index is None else f"{reason} (first mismatch at n = {index})")
