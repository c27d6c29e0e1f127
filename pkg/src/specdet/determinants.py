"""Zeta-regularized determinants.

``det_closed_form`` sums exact rational weights (Stirling numbers, central
factorial numbers, harmonic numbers) against the constants zeta'(-k).
``det_voros`` rebuilds the same quantity from the shifted zeta function: its
derivative at 0, finite parts and residue terms at the integer poles, and the
convergent power series in the shift. ``direct_series_zeta`` sums the
defining Dirichlet series and serves as ground truth for the expansions.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import combinatorics as comb
from . import special
from .errors import ConvergenceTooSlow, OutOfRange, ShiftTooLarge
from .expansion import Kind, Manifold, _parts, explicit_build
from .numeric import GUARD_DIGITS, BigReal, constant_glaisher, to_mpf, working_context


class Method(str, enum.Enum):
    CLOSED_FORM = "closed"
    VOROS = "voros"
    LOW_DIM = "lowdim"


@dataclass(frozen=True)
class DetResult:
    manifold: Manifold
    log_det_negated: BigReal
    det: BigReal
    method: Method
    digits: int
    tail_bound: BigReal | None = None
    series_terms: int | None = None

    @classmethod
    def from_zeta_prime(cls, m: Manifold, zp: BigReal, method: Method, digits: int, **extra) -> "DetResult":
        return cls(m, zp, (-zp).exp(), method, digits, **extra)


def _as_manifold(m, dim: int | None = None) -> Manifold:
    if isinstance(m, Manifold):
        return m
    return Manifold(Kind(m), dim)


# closed forms -------------------------------------------------------------


def _log_sum(n: int, norm, base: int, denom: int) -> Fraction:
    """sum_i norm(n,i) base^(2i)/(denom*i) (H_(i-1)/2 - H_(2i-1))."""
    total = Fraction(0)
    for i in range(1, n + 1):
        w = norm(n, i)
        if w:
            total += w * Fraction(base ** (2 * i), denom * i) * (comb.harmonic(i - 1) / 2 - comb.harmonic(2 * i - 1))
    return total


def _closed_parts(m: Manifold, ctx, work: int) -> list:
    """Summands of zeta'_M(0); their sum is the negated log-determinant."""
    d = m.dim
    zp = lambda k: special.zeta_prime_neg_int_mpf(k, ctx, work)  # noqa: E731
    s1 = comb.stirling_row
    parts = []
    if m.kind is Kind.SPHERE:
        if d == 1:
            return [-2 * ctx.ln(2 * ctx.pi)]
        if d % 2:
            n = (d - 1) // 2
            f = math.factorial(2 * n)
            a, b = s1(2 * n), s1(2 * n + 1)
            for k in range(1, n + 1):
                parts.append(zp(2 * k) * to_mpf(Fraction(2 * (a[2 * k] + b[2 * k + 1]), f), ctx))
            parts.append(ctx.ln(n) - ctx.ln(ctx.pi))
            return parts
        n = d // 2
        f = math.factorial(2 * n - 1)
        a, b = s1(2 * n - 1), s1(2 * n)
        for k in range(1, n + 1):
            parts.append(zp(2 * k - 1) * to_mpf(Fraction(2 * (a[2 * k - 1] + b[2 * k]), f), ctx))
        parts.append(to_mpf(_log_sum(n, comb.v_bar, 2 * n - 1, 2), ctx))
        parts.append(ctx.ln(2 * n - 1))
        return parts
    if m.kind is Kind.HEMISPHERE:
        if d % 2:
            n = (d + 1) // 2
            f = math.factorial(2 * n - 2)
            a, b = s1(2 * n - 1), s1(2 * n - 2)
            for k in range(0, 2 * n):
                c = a[k + 1] if k + 1 < len(a) else 0
                c += (-1) ** k * (b[k] if k < len(b) else 0)
                if c:
                    parts.append(zp(k) * to_mpf(Fraction(c, f), ctx))
            rest = Fraction(0)
            for i in range(1, n):
                rest += comb.u_bar(n - 1, i) * Fraction((n - 1) ** (2 * i + 1), 2 * i) * (
                    comb.harmonic(i - 1) / 2 - comb.harmonic(2 * i - 1)
                )
            parts.append(to_mpf(-rest, ctx))
            return parts
        n = d // 2
        f = math.factorial(2 * n - 1)
        a, b = s1(2 * n), s1(2 * n - 1)
        for k in range(0, 2 * n):
            c = a[k + 1] - (-1) ** k * (b[k] if k < len(b) else 0)
            if c:
                parts.append(zp(k) * to_mpf(Fraction(c, f), ctx))
        parts.append(to_mpf(_log_sum(n, comb.v_bar, 2 * n - 1, 4), ctx))
        return parts
    if m.kind is Kind.PROJECTIVE:
        if d == 1:
            return [-2 * ctx.ln(ctx.pi)]
        if d % 2:
            n = (d + 1) // 2
            f = math.factorial(2 * n - 2)
            a, b = s1(2 * n - 1), s1(2 * n - 2)
            for k in range(0, n):
                c = a[2 * k + 1] + b[2 * k]
                if c:
                    parts.append(zp(2 * k) * to_mpf(Fraction(2 ** (2 * k + 1) * c, f), ctx))
            parts.append(ctx.ln(4 * (n - 1)))
            return parts
        n = d // 2
        f = math.factorial(2 * n - 1)
        a, b = s1(2 * n), s1(2 * n - 1)
        for k in range(0, 2 * n):
            c = a[k + 1] + (b[k] if k < len(b) else 0)
            weight = 1 - (2 ** (k + 1) if k % 2 == 0 else 0)
            if c:
                parts.append(zp(k) * to_mpf(Fraction(weight * c, f), ctx))
        parts.append(ctx.ln(4 * n - 2))
        parts.append(to_mpf(_log_sum(n, comb.v_bar, 2 * n - 1, 4), ctx))
        return parts
    # harmonic oscillator
    if d % 2 == 0:
        n = d // 2
        f = math.factorial(2 * n - 1)
        row = comb.u_row(n)
        ln2 = ctx.ln(2)
        for i in range(1, n + 1):
            z_neg = -comb.bernoulli(2 * i) / (2 * i)  # zeta(1 - 2i)
            parts.append(to_mpf(Fraction(row[i], f), ctx) * (zp(2 * i - 1) - ln2 * to_mpf(z_neg, ctx)))
        return parts
    n = (d + 1) // 2
    f = 4**n * math.factorial(2 * n - 2)
    row = comb.v_row(n)
    for i in range(2, n + 1):
        parts.append(zp(2 * i - 2) * to_mpf(Fraction((4 - 4**i) * row[i], f), ctx))
    w = Fraction((-1) ** n * 8 * math.factorial(2 * n - 2), 16**n * math.factorial(n - 1) ** 2)
    parts.append(to_mpf(w, ctx) * ctx.ln(2))
    return parts


def _sum_with_guard(build, digits: int) -> BigReal:
    """Sum ``build(ctx, work)`` raising the working precision until cancellation is covered."""
    work = digits + GUARD_DIGITS
    for _ in range(8):
        ctx = working_context(work + 5)
        parts = build(ctx, work)
        total = ctx.fsum(parts)
        mag = max((abs(p) for p in parts), default=ctx.zero)
        scale = max(abs(total), ctx.one)
        loss = 0 if mag <= scale else math.ceil(float(ctx.log10(mag / scale)))
        if work - loss >= digits + 3:
            break
        work = digits + loss + GUARD_DIGITS
    return BigReal(total, digits)


def zeta_prime_closed_form(m, digits: int = 64, dim: int | None = None) -> BigReal:
    m = _as_manifold(m, dim)
    return _sum_with_guard(lambda ctx, work: _closed_parts(m, ctx, work), digits)


def det_closed_form(m, digits: int = 64, dim: int | None = None) -> DetResult:
    """Determinant from the closed-form expression for zeta'_M(0)."""
    m = _as_manifold(m, dim)
    return DetResult.from_zeta_prime(m, zeta_prime_closed_form(m, digits), Method.CLOSED_FORM, digits)


# low-dimensional spheres --------------------------------------------------

# per dimension: (rational prefactor, pi power, exponent rational, {zeta(odd) j: weight over pi^(j-1)},
#                 {zeta'(-j): weight}, Glaisher power)
_LOW_DIM = {
    2: (Fraction(1), 0, Fraction(1, 6), {}, {}, Fraction(4)),
    3: (Fraction(1), 1, Fraction(0), {3: Fraction(1, 2)}, {}, Fraction(0)),
    4: (Fraction(1, 3), 0, Fraction(83, 144), {}, {3: Fraction(-2, 3)}, Fraction(13, 3)),
    5: (Fraction(1, 2), 1, Fraction(0), {3: Fraction(23, 24), 5: Fraction(-1, 8)}, {}, Fraction(0)),
    6: (Fraction(1, 5), 0, Fraction(1381, 2160), {}, {3: Fraction(-2), 5: Fraction(-1, 30)}, Fraction(149, 30)),
    7: (Fraction(1, 3), 1, Fraction(0), {3: Fraction(949, 720), 5: Fraction(-13, 24), 7: Fraction(1, 32)}, {}, Fraction(0)),
    8: (
        Fraction(1, 7),
        0,
        Fraction(4730849, 7257600),
        {},
        {3: Fraction(-1199, 360), 5: Fraction(-71, 360), 7: Fraction(-1, 1260)},
        Fraction(383, 70),
    ),
    9: (
        Fraction(1, 4),
        1,
        Fraction(0),
        {3: Fraction(16399, 10080), 5: Fraction(-2087, 1920), 7: Fraction(31, 128), 9: Fraction(-1, 128)},
        {},
        Fraction(0),
    ),
}


def det_lowdim_constant(dim: int, digits: int = 64) -> DetResult:
    """Sphere determinant for 2 <= dim <= 9 from its expression in pi, A, zeta(odd), zeta'(-odd)."""
    if dim not in _LOW_DIM:
        raise OutOfRange(f"low-dimensional constants exist for dims 2..9, got {dim}")
    pre, pi_pow, rat, zodd, zpodd, a_pow = _LOW_DIM[dim]
    work = digits + GUARD_DIGITS
    ctx = working_context(work + 5)
    pi = +ctx.pi
    expo = to_mpf(rat, ctx)
    for j, w in zodd.items():
        expo += to_mpf(w, ctx) * special.hurwitz_zeta_mpf(j, 1, ctx, work) / pi ** (j - 1)
    for j, w in zpodd.items():
        expo += to_mpf(w, ctx) * special.zeta_prime_neg_int_mpf(j, ctx, work)
    log_det = ctx.ln(to_mpf(pre, ctx)) + pi_pow * ctx.ln(pi) + expo
    if a_pow:
        log_a = ctx.ln(to_mpf(constant_glaisher(work), ctx))
        log_det += to_mpf(a_pow, ctx) * log_a
    zp = BigReal(-log_det, digits)
    return DetResult.from_zeta_prime(Manifold(Kind.SPHERE, dim), zp, Method.LOW_DIM, digits)


# Voros assembly -----------------------------------------------------------

MAX_SERIES_TERMS = 1_000_000


def det_voros(m, digits: int = 64, series_terms: int | None = None, dim: int | None = None) -> DetResult:
    """Determinant assembled from the shifted zeta function.

    zeta'_M(0) = E'(0) + sum_{m<=mu} FP[E](m) L^m/m + sum_{2<=m<=mu} c_m H_(m-1) L^m/m!
                 + sum_{m>mu} E(m) L^m/m,
    where E is the shifted zeta function and L the shift. The series terms
    decrease at least geometrically with ratio L / (smallest shifted eigenvalue),
    which gives the recorded tail bound.
    """
    m = _as_manifold(m, dim)
    e = explicit_build(m)
    lam = m.shift
    if lam == 0:
        zp = e.eval_deriv(0, digits)
        return DetResult.from_zeta_prime(m, zp, Method.VOROS, digits, tail_bound=BigReal.of(0, digits), series_terms=0)
    smallest = m.root(m.first_index) ** 2
    ratio = lam / smallest
    if ratio >= 1:
        raise ShiftTooLarge(f"shift {lam} is not below the smallest shifted eigenvalue {smallest}")
    mu = e.mu
    top = math.floor(mu) if mu is not None else 0
    if series_terms is not None and series_terms < top + 10:
        raise ValueError(f"series_terms must be at least {top + 10}")

    work = digits + GUARD_DIGITS
    ctx = working_context(work + 5)
    lam_m = to_mpf(lam, ctx)
    total = to_mpf(e.eval_deriv(0, work), ctx)
    for j in range(1, top + 1):
        total += to_mpf(e.finite_part(j, work), ctx) * lam_m**j / j
    for j in range(2, top + 1):
        c = e.c_coefficient(j, work)
        if c.value:
            total += to_mpf(c, ctx) * to_mpf(comb.harmonic(j - 1), ctx) * lam_m**j / math.factorial(j)

    # series part: choose per-term precision so each E(j) L^j / j is accurate to 10^-(work)
    coeff_mag = [(abs(t.coeff), t.base) for t in e.terms]
    log_lam = math.log10(float(lam))
    rho = float(ratio)
    tol = 10.0 ** (-(digits + 5))
    cap = series_terms if series_terms is not None else MAX_SERIES_TERMS
    j = top + 1
    last = None
    tail = None
    while True:
        if j > cap + top:
            if series_terms is not None:
                break
            raise ConvergenceTooSlow(f"Voros series needs more than {MAX_SERIES_TERMS} terms")
        size = max(math.log10(float(q)) + j * math.log10(float(g)) for q, g in coeff_mag) + j * log_lam
        need = work + max(0, math.ceil(size)) + 5
        jctx = working_context(need + 5)
        val = jctx.fsum(_parts(e, j, need, jctx, deriv=False))
        term = val * jctx.power(to_mpf(lam, jctx), j) / j
        total += ctx.convert(term)
        last = abs(float(term)) if term else 0.0
        tail = last * rho / (1 - rho)
        if series_terms is None and j > top + 10 and tail < tol:
            break
        if series_terms is not None and j >= series_terms:
            break
        j += 1
    zp = BigReal(total, digits)
    return DetResult.from_zeta_prime(
        m, zp, Method.VOROS, digits, tail_bound=BigReal.of(tail or 0.0, digits), series_terms=j - top
    )


# direct Dirichlet series --------------------------------------------------


def direct_series_zeta(m, s, K: int = 100_000, digits: int = 30, dim: int | None = None, tol=None) -> BigReal:
    """Truncated defining series of the shifted zeta function plus an integral tail estimate.

    The k-th summand behaves like C k^(n-1-alpha*s), so the tail beyond K is
    estimated by K f(K) / (alpha*s - n) - f(K)/2, with an uncertainty of about f(K).
    """
    m = _as_manifold(m, dim)
    e = explicit_build(m)
    mu = e.mu if e.mu is not None else Fraction(0)
    ctx = working_context(digits + GUARD_DIGITS)
    sv = to_mpf(s, ctx)
    if sv <= to_mpf(mu, ctx) + ctx.mpf(1) / 2:
        raise ValueError(f"direct series needs s > mu + 1/2 = {mu + Fraction(1, 2)}")
    alpha = m.arg_scale
    expo = alpha * sv
    start = m.first_index
    ints = expo == ctx.floor(expo)
    ie = int(expo) if ints else None
    acc = []
    f_last = None
    for k in range(start, start + K):
        r = m.root(k)
        mult = m.multiplicity(k)
        if ints:
            f = ctx.mpf(mult * r.denominator**ie) / ctx.mpf(r.numerator**ie)
        else:
            f = mult * ctx.power(to_mpf(r, ctx), -expo)
        acc.append(f)
        f_last = f
    total = ctx.fsum(acc)
    n = m.dim
    k_end = start + K - 1
    tail = k_end * f_last / (expo - n) - f_last / 2
    if tol is not None and f_last > to_mpf(tol, ctx):
        raise ConvergenceTooSlow(f"tail uncertainty {ctx.nstr(f_last, 3)} exceeds tolerance {tol}")
    return BigReal(total + tail, digits)


# tables -------------------------------------------------------------------

TABLE_FAMILIES = (Kind.SPHERE, Kind.HEMISPHERE, Kind.PROJECTIVE)


def _closed_worker(args) -> tuple[str, int, str]:
    kind, dim, digits = args
    r = det_closed_form(Manifold(Kind(kind), dim), digits)
    ctx = working_context(digits + GUARD_DIGITS)
    return kind, dim, ctx.nstr(r.log_det_negated.value, digits + GUARD_DIGITS, strip_zeros=False)


def det_table(family, max_dim: int, digits: int = 64, workers: int | None = None) -> list[DetResult]:
    """Closed-form determinants for dims 1..max_dim, in (family, dim) order.

    ``family`` is a kind or "all" (sphere, hemisphere, projective). With
    ``workers`` > 1 dimensions are evaluated in a process pool; the output
    order does not depend on it.
    """
    if max_dim < 1:
        raise ValueError("max_dim must be >= 1")
    kinds = TABLE_FAMILIES if family == "all" else (Kind(family),)
    jobs = [(k.value, d, digits) for k in kinds for d in range(1, max_dim + 1)]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            raw = list(pool.map(_closed_worker, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
        out = []
        for kind, dim, text in raw:
            zp = BigReal.of(text, digits)
            out.append(DetResult.from_zeta_prime(Manifold(Kind(kind), dim), zp, Method.CLOSED_FORM, digits))
        return out
    return [det_closed_form(Manifold(Kind(k), d), digits) for k, d, _ in jobs]
