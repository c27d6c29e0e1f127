"""Exception types shared across the package."""

from __future__ import annotations

from fractions import Fraction


class SpecDetError(Exception):
    """Base class for all package errors."""


class PoleError(SpecDetError):
    """Raised when a zeta-type function is evaluated at (or within rounding of) a pole."""

    def __init__(self, location: Fraction | float, message: str | None = None):
        self.location = location
        super().__init__(message or f"pole at s = {location}")


class UnsupportedDimension(SpecDetError, ValueError):
    pass


class OutOfRange(SpecDetError, ValueError):
    pass


class ShiftTooLarge(SpecDetError):
    """The Voros series needs |shift / eigenvalue| < 1 for every shifted eigenvalue."""


class ConvergenceTooSlow(SpecDetError):
    pass
