"""Arbitrary-precision reals and fundamental constants.

Every computation runs in an ``mpmath`` context private to the calling thread
and to the requested precision, so no global precision state is ever touched.
``BigReal`` is the immutable value type returned by the public API; hot loops
work on raw ``mpf`` values obtained from :func:`working_context`.
"""

from __future__ import annotations

import decimal
import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from mpmath import MPContext

DEFAULT_DIGITS = 64
GUARD_DIGITS = 10
MAX_DIGITS = 10_000

_local = threading.local()


def default_digits() -> int:
    """Default working precision, overridable through ``SPECDET_DIGITS``."""
    raw = os.environ.get("SPECDET_DIGITS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return DEFAULT_DIGITS


def working_context(dps: int) -> MPContext:
    """Return this thread's mpmath context at ``dps`` decimal digits.

    Contexts are cached per thread, so concurrent callers never share one.
    """
    if dps < 1:
        raise ValueError("precision must be a positive number of digits")
    cache = getattr(_local, "contexts", None)
    if cache is None:
        cache = _local.contexts = {}
    ctx = cache.get(dps)
    if ctx is None:
        ctx = MPContext()
        ctx.dps = dps
        cache[dps] = ctx
    return ctx


def guarded(digits: int) -> MPContext:
    """Context carrying the standard guard digits on top of ``digits``."""
    return working_context(digits + GUARD_DIGITS)


Real = Union[int, Fraction, float, str, "BigReal"]


def to_mpf(x, ctx: MPContext):
    """Convert ints, fractions, decimal strings, floats, mpf and BigReal into ``ctx``."""
    if isinstance(x, BigReal):
        return ctx.convert(x.value)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return ctx.mpf(x.numerator)
        return ctx.mpf(x.numerator) / x.denominator
    if isinstance(x, bool):
        raise TypeError("booleans are not reals")
    if isinstance(x, (int, float, str)):
        return ctx.mpf(x)
    return ctx.convert(x)


@dataclass(frozen=True)
class BigReal:
    """Immutable arbitrary-precision real.

    ``value`` is held with guard digits; ``digits`` is the precision the value
    is guaranteed to (two units in the last place). Binary operations take the
    smaller of the two precisions.
    """

    value: object
    digits: int

    @classmethod
    def of(cls, x: Real, digits: int) -> "BigReal":
        return cls(to_mpf(x, guarded(digits)), digits)

    def _pair(self, other) -> tuple[MPContext, object, object, int]:
        if isinstance(other, BigReal):
            d = min(self.digits, other.digits)
        else:
            d = self.digits
        ctx = guarded(d)
        return ctx, ctx.convert(self.value), to_mpf(other, ctx), d

    def __add__(self, other):
        ctx, a, b, d = self._pair(other)
        return BigReal(a + b, d)

    __radd__ = __add__

    def __sub__(self, other):
        ctx, a, b, d = self._pair(other)
        return BigReal(a - b, d)

    def __rsub__(self, other):
        ctx, a, b, d = self._pair(other)
        return BigReal(b - a, d)

    def __mul__(self, other):
        ctx, a, b, d = self._pair(other)
        return BigReal(a * b, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        ctx, a, b, d = self._pair(other)
        return BigReal(a / b, d)

    def __rtruediv__(self, other):
        ctx, a, b, d = self._pair(other)
        return BigReal(b / a, d)

    def __pow__(self, other):
        ctx, a, b, d = self._pair(other)
        return BigReal(ctx.power(a, b), d)

    def __neg__(self):
        return BigReal(-self.value, self.digits)

    def __abs__(self):
        return BigReal(abs(self.value), self.digits)

    def ln(self) -> "BigReal":
        ctx = guarded(self.digits)
        return BigReal(ctx.ln(ctx.convert(self.value)), self.digits)

    def exp(self) -> "BigReal":
        ctx = guarded(self.digits)
        return BigReal(ctx.exp(ctx.convert(self.value)), self.digits)

    def _cmp_value(self, other):
        ctx, a, b, _ = self._pair(other)
        return a, b

    def __lt__(self, other):
        a, b = self._cmp_value(other)
        return a < b

    def __le__(self, other):
        a, b = self._cmp_value(other)
        return a <= b

    def __gt__(self, other):
        a, b = self._cmp_value(other)
        return a > b

    def __ge__(self, other):
        a, b = self._cmp_value(other)
        return a >= b

    def __float__(self):
        return float(self.value)

    def is_close(self, other, tol: Real) -> bool:
        ctx, a, b, _ = self._pair(other)
        return abs(a - b) <= to_mpf(tol, ctx)

    def to_decimal(self, digits: int | None = None) -> decimal.Decimal:
        """Round to ``digits`` significant digits, ties to even."""
        n = self.digits if digits is None else digits
        ctx = guarded(max(n, 1))
        raw = ctx.nstr(ctx.convert(self.value), n + GUARD_DIGITS, strip_zeros=False)
        dctx = decimal.Context(prec=n, rounding=decimal.ROUND_HALF_EVEN)
        return dctx.plus(decimal.Decimal(raw))

    def to_string(self, digits: int | None = None) -> str:
        """Plain decimal string with ``digits`` significant digits (no exponent)."""
        d = self.to_decimal(digits)
        if d.is_zero():
            return "0"
        return format(d, "f")

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"BigReal('{self.to_string()}', digits={self.digits})"


def big_real_from_rational(q: Fraction | int, digits: int) -> BigReal:
    if digits < 1:
        raise ValueError("digits must be >= 1")
    return BigReal.of(Fraction(q), digits)


def constant_pi(digits: int) -> BigReal:
    if digits < 1:
        raise ValueError("digits must be >= 1")
    ctx = guarded(digits)
    return BigReal(+ctx.pi, digits)


def constant_euler_gamma(digits: int) -> BigReal:
    if digits < 1:
        raise ValueError("digits must be >= 1")
    ctx = guarded(digits)
    return BigReal(+ctx.euler, digits)


def constant_glaisher(digits: int) -> BigReal:
    """Glaisher-Kinkelin constant from ln A = 1/12 - zeta'(-1)."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    from .special import zeta_prime_neg_int

    ctx = guarded(digits)
    zp1 = to_mpf(zeta_prime_neg_int(1, digits), ctx)
    return BigReal(ctx.exp(ctx.mpf(1) / 12 - zp1), digits)
