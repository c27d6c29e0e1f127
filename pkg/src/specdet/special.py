"""Hurwitz and Riemann zeta functions, their s-derivatives, and digamma.

All evaluation goes through one Euler-Maclaurin routine valid for every real
s != 1 and rational shift a > 0:

    zeta(s, a) = sum_{k<N} (k+a)^-s + x^(1-s)/(s-1) + x^-s/2
                 + sum_{p>=1} B_2p/(2p)! (s)_(2p-1) x^(-s-2p+1),     x = N + a

with the s-derivative taken term by term. The correction series is summed
until its terms drop below the target; if they start growing first, N is
doubled and the sum restarted.

Accuracy contract: absolute error at most 10^-digits * max(1, |result|).
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from . import combinatorics as comb
from .errors import ConvergenceTooSlow, PoleError
from .numeric import GUARD_DIGITS, BigReal, guarded, to_mpf, working_context

_MAX_N = 2_000_000
_MAX_CORRECTIONS = 5000


def _bernoulli_weights(ctx, count: int) -> list:
    """B_2p/(2p)! for p = 0..count-1 as mpf in ``ctx`` (cached on the context)."""
    cache = getattr(ctx, "_specdet_bw", None)
    if cache is None:
        cache = ctx._specdet_bw = []
    while len(cache) < count:
        p = len(cache)
        b = comb.bernoulli(2 * p) / math.factorial(2 * p)
        cache.append(ctx.mpf(b.numerator) / b.denominator)
    return cache


def _initial_cutoff(s: float, a: float, digits: int) -> int:
    n = max(math.ceil(0.7 * digits) + math.ceil(abs(s)), math.ceil(2 * abs(s)), 4)
    if s > 2:
        # the plain partial sum alone already reaches the target
        expo = digits / (s - 1)
        if expo < 15:
            n = min(n, max(4, math.ceil(10 ** expo - a) + 1))
    return n


def _em(s, a: Fraction, digits: int, derivative: bool):
    """Euler-Maclaurin value (or s-derivative) as an mpf carrying ``digits`` digits."""
    sf = float(s)
    af = float(a)
    n = _initial_cutoff(sf, af, digits)
    while True:
        if n > _MAX_N:
            raise ConvergenceTooSlow(f"Euler-Maclaurin cutoff exceeded {_MAX_N} at s = {sf}")
        # cancellation in the partial sum for s < 1 costs about log10 of its size
        size = (1 - sf) * math.log10(n + af) + math.log10(max(math.log(n + af), 1.0)) if sf < 1 else 0.0
        work = working_context(digits + GUARD_DIGITS + max(0, math.ceil(size)))
        result = _em_fixed(work, s, a, n, digits, derivative)
        if result is not None:
            return result
        n *= 2


def _em_fixed(ctx, s, a: Fraction, n: int, digits: int, derivative: bool):
    s = ctx.convert(s)
    a_m = ctx.mpf(a.numerator) / a.denominator
    total = ctx.zero
    if derivative:
        for k in range(n):
            y = a_m + k
            total -= ctx.ln(y) * ctx.power(y, -s)
    else:
        for k in range(n):
            total += ctx.power(a_m + k, -s)
    x = a_m + n
    lx = ctx.ln(x)
    xs = ctx.power(x, -s)
    x1s = xs * x
    sm1 = s - 1
    if derivative:
        total += -lx * x1s / sm1 - x1s / (sm1 * sm1) - lx * xs / 2
    else:
        total += x1s / sm1 + xs / 2

    eps = ctx.mpf(10) ** (-(digits + 2))
    scale = max(abs(total), ctx.one)
    poch = s
    dpoch = ctx.one
    xpow = xs / x
    inv_x2 = 1 / (x * x)
    prev = None
    weights = _bernoulli_weights(ctx, 64)
    for p in range(1, _MAX_CORRECTIONS):
        if p >= len(weights):
            weights = _bernoulli_weights(ctx, 2 * len(weights))
        w = weights[p]
        if derivative:
            term = w * (dpoch - lx * poch) * xpow
        else:
            term = w * poch * xpow
        total += term
        mag = abs(term)
        if mag <= eps * scale:
            if derivative or poch == 0 or p > 1:
                scale = max(abs(total), ctx.one)
                if mag <= eps * scale:
                    return total
        if prev is not None and p > 3 and mag > prev and mag > eps * scale:
            return None
        prev = mag
        j = 2 * p - 1
        f1 = s + j
        f2 = s + j + 1
        dpoch = (dpoch * f1 + poch) * f2 + poch * f1
        poch = poch * f1 * f2
        xpow *= inv_x2
    return None


def _check_args(s, a: Fraction, digits: int, ctx) -> None:
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if a <= 0:
        raise ValueError("Hurwitz shift must be positive")
    if abs(s - 1) <= ctx.mpf(10) ** (-digits):
        raise PoleError(Fraction(1))


def _coerce_shift(a) -> Fraction:
    return a if isinstance(a, Fraction) else Fraction(a)


def hurwitz_zeta_mpf(s, a, ctx, digits: int):
    """zeta(s, a) as an mpf in ``ctx``; ``s`` may be any real accepted by :func:`to_mpf`."""
    a = _coerce_shift(a)
    s_m = to_mpf(s, ctx)
    _check_args(s_m, a, digits, ctx)
    return ctx.convert(_em(s_m, a, digits, derivative=False))


def hurwitz_zeta_deriv_mpf(s, a, ctx, digits: int):
    a = _coerce_shift(a)
    s_m = to_mpf(s, ctx)
    _check_args(s_m, a, digits, ctx)
    return ctx.convert(_em(s_m, a, digits, derivative=True))


def hurwitz_zeta(s, a=Fraction(1), digits: int = 64) -> BigReal:
    """Hurwitz zeta function zeta(s, a) for real s != 1 and rational a > 0."""
    ctx = guarded(digits)
    return BigReal(hurwitz_zeta_mpf(s, a, ctx, digits + GUARD_DIGITS // 2), digits)


def hurwitz_zeta_deriv(s, a=Fraction(1), digits: int = 64) -> BigReal:
    """Partial derivative of zeta(s, a) with respect to s."""
    ctx = guarded(digits)
    return BigReal(hurwitz_zeta_deriv_mpf(s, a, ctx, digits + GUARD_DIGITS // 2), digits)


def riemann_zeta(s, digits: int = 64) -> BigReal:
    return hurwitz_zeta(s, Fraction(1), digits)


_ZP_CACHE: dict[tuple[int, int], object] = {}
_ZP_LOCK = threading.Lock()


_FUNCTIONAL_FROM = 40


def zeta_prime_neg_int_mpf(k: int, ctx, digits: int):
    """zeta'(-k) as an mpf in ``ctx``, memoized per (k, digits).

    Small k go through the negative-argument Euler-Maclaurin sum; from k = 40
    on, where that sum needs many extra digits to absorb cancellation, the
    functional-equation route is used instead.
    """
    key = (k, digits)
    hit = _ZP_CACHE.get(key)
    if hit is None:
        if k < 0:
            raise ValueError("k must be non-negative")
        home = working_context(digits + GUARD_DIGITS)
        if k < _FUNCTIONAL_FROM:
            hit = home.convert(_em(-k, Fraction(1), digits, derivative=True))
        else:
            hit = _zp_functional(k, home, digits)
        with _ZP_LOCK:
            _ZP_CACHE.setdefault(key, hit)
        hit = _ZP_CACHE[key]
    return ctx.convert(hit)


def zeta_prime_neg_int(k: int, digits: int = 64) -> BigReal:
    """zeta'(-k) for k >= 0 (k = 0 gives zeta'(0) = -log(2 pi)/2)."""
    ctx = guarded(digits)
    return BigReal(zeta_prime_neg_int_mpf(k, ctx, digits + GUARD_DIGITS // 2), digits)


def zeta_prime_neg_int_em(k: int, digits: int = 64) -> BigReal:
    """zeta'(-k) from the Euler-Maclaurin sum at s = -k, never cached."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return BigReal(_em(-k, Fraction(1), digits + GUARD_DIGITS // 2, derivative=True), digits)


def _zp_functional(k: int, ctx, digits: int):
    two_pi = 2 * ctx.pi
    if k == 0:
        return -ctx.ln(two_pi) / 2
    if k % 2 == 0:
        m = k // 2
        z = hurwitz_zeta_mpf(2 * m + 1, 1, ctx, digits)
        return (-1) ** m * math.factorial(2 * m) * z / (2 * two_pi ** (2 * m))
    m = (k + 1) // 2
    if m <= 100:
        b = comb.bernoulli(2 * m)
        zeta_even = (-1) ** (m + 1) * to_mpf(b, ctx) * two_pi ** (2 * m) / (2 * math.factorial(2 * m))
        psi = to_mpf(comb.harmonic(2 * m - 1), ctx) - ctx.euler
    else:
        # exact Bernoulli and harmonic numbers get expensive; both converge fast numerically here
        zeta_even = hurwitz_zeta_mpf(2 * m, 1, ctx, digits)
        psi = ctx.harmonic(2 * m - 1) - ctx.euler
    dz = hurwitz_zeta_deriv_mpf(2 * m, 1, ctx, digits)
    val = -2 * (-1) ** m * math.factorial(2 * m - 1) * zeta_even / two_pi ** (2 * m)
    return val * (psi - ctx.ln(two_pi) + dz / zeta_even)


def zeta_prime_neg_int_functional(k: int, digits: int = 64) -> BigReal:
    """zeta'(-k) from the differentiated functional equation.

    Even k = 2m: (-1)^m (2m)! zeta(2m+1) / (2 (2pi)^2m).
    Odd k = 2m-1: -2 (-1)^m (2m-1)! zeta(2m) / (2pi)^2m
                  * (psi(2m) - log(2pi) + zeta'(2m)/zeta(2m)),
    with zeta(2m) from Bernoulli numbers and psi(2m) = H_(2m-1) - gamma.
    Only positive arguments reach the Euler-Maclaurin sum here.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    ctx = guarded(digits)
    return BigReal(_zp_functional(k, ctx, digits + GUARD_DIGITS), digits)


def digamma_rational_mpf(a, ctx):
    """psi(a) for rational a > 0 via Gauss's digamma theorem plus psi(x+1) = psi(x) + 1/x."""
    a = _coerce_shift(a)
    if a <= 0:
        raise ValueError("digamma argument must be positive")
    whole = math.ceil(a) - 1
    frac = a - whole  # in (0, 1]
    r, m = frac.numerator, frac.denominator
    if r == m:
        base = -ctx.euler
    else:
        base = -ctx.euler - ctx.ln(2 * m) - ctx.pi / 2 * ctx.cot(ctx.pi * r / m)
        for j in range(1, (m - 1) // 2 + 1):
            base += 2 * ctx.cospi(ctx.mpf(2 * j * r) / m) * ctx.ln(ctx.sinpi(ctx.mpf(j) / m))
    shift = sum((Fraction(1) / (frac + j) for j in range(whole)), Fraction(0))
    return base + to_mpf(shift, ctx)


def digamma_rational(a, digits: int = 64) -> BigReal:
    ctx = guarded(digits)
    return BigReal(digamma_rational_mpf(a, ctx), digits)


def digamma_half_int(x, digits: int = 64) -> BigReal:
    """psi(x) for x a positive integer or half-integer.

    psi(n) = H_(n-1) - gamma and psi(n + 1/2) = 2 sum_{k<=n} 1/(2k-1) - gamma - 2 log 2.
    """
    x = Fraction(x)
    if x <= 0 or (2 * x).denominator != 1:
        raise ValueError("argument must be a positive integer or half-integer")
    ctx = guarded(digits)
    if x.denominator == 1:
        val = to_mpf(comb.harmonic(int(x) - 1), ctx) - ctx.euler
    else:
        n = int(x - Fraction(1, 2))
        odd = sum((Fraction(2, 2 * k - 1) for k in range(1, n + 1)), Fraction(0))
        val = to_mpf(odd, ctx) - ctx.euler - 2 * ctx.ln(2)
    return BigReal(val, digits)
