"""Shifted spectral zeta functions as finite sums of Hurwitz-zeta terms.

A ``ZetaExpansion`` is a canonical linear combination of

    ZetaTerm:  q * g^s * zeta(alpha*s + beta, a)
    ExpTerm:   q * r^s

with exact rational q, g, a, r and integers alpha in {1, 2}, beta. The four
eigenvalue families are built either from their closed forms or by running
the dimension recursions symbolically from the low-dimensional seeds; both
routes land on the same canonical structure.

For the sphere, hemisphere and projective families the expansion describes
sum_k m_k (k + c)^(-2s) over the square roots of the shifted eigenvalues
lambda_k + ((n-1)/2)^2. The oscillator expansion is sum_k m_k (2k + n)^(-s).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from . import combinatorics as comb
from . import special
from .errors import PoleError, SpecDetError, UnsupportedDimension
from .numeric import GUARD_DIGITS, BigReal, to_mpf, working_context


class Kind(str, enum.Enum):
    SPHERE = "sphere"
    HEMISPHERE = "hemisphere"
    PROJECTIVE = "projective"
    OSCILLATOR = "oscillator"


@dataclass(frozen=True)
class Manifold:
    kind: Kind
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if not isinstance(self.dim, int) or self.dim < 1:
            raise UnsupportedDimension(f"dimension must be a positive integer, got {self.dim!r}")

    @property
    def shift(self) -> Fraction:
        """The constant added to every eigenvalue to make it a perfect square."""
        if self.kind is Kind.OSCILLATOR:
            return Fraction(0)
        return Fraction(self.dim - 1, 2) ** 2

    @property
    def arg_scale(self) -> int:
        return 1 if self.kind is Kind.OSCILLATOR else 2

    def multiplicity(self, k: int) -> int:
        n = self.dim
        if self.kind is Kind.SPHERE:
            if n == 1:
                return 2
            return (2 * k + n - 1) * math.comb(k + n - 2, k) // (n - 1)
        if self.kind is Kind.HEMISPHERE:
            return math.comb(n + k - 2, k - 1)
        if self.kind is Kind.PROJECTIVE:
            return math.comb(n + 2 * k, 2 * k) - math.comb(n + 2 * k - 2, 2 * k - 2)
        return math.comb(n + k - 1, k)

    def root(self, k: int) -> Fraction:
        """Base of the k-th term: shifted eigenvalue**(1/2), or 2k + n for the oscillator."""
        n = self.dim
        if self.kind is Kind.PROJECTIVE:
            return 2 * k + Fraction(n - 1, 2)
        if self.kind is Kind.OSCILLATOR:
            return Fraction(2 * k + n)
        return k + Fraction(n - 1, 2)

    @property
    def first_index(self) -> int:
        return 0 if self.kind is Kind.OSCILLATOR else 1

    def eigenvalue(self, k: int) -> Fraction:
        """Unshifted eigenvalue with index k."""
        if self.kind is Kind.OSCILLATOR:
            return self.root(k)
        return self.root(k) ** 2 - self.shift

    def __str__(self):
        return f"{self.kind.value}({self.dim})"


@dataclass(frozen=True)
class ZetaTerm:
    """q * g^s * zeta(alpha*s + beta, a)."""

    coeff: Fraction
    base: Fraction
    arg_scale: int
    arg_offset: int
    shift: Fraction

    @property
    def key(self) -> tuple:
        return (self.shift, self.arg_scale, self.arg_offset, self.base)

    @property
    def pole(self) -> Fraction:
        return Fraction(1 - self.arg_offset, self.arg_scale)

    def __str__(self):
        return f"{_fmt_q(self.coeff)}{_fmt_pow(self.base)}zeta({_fmt_arg(self.arg_scale, self.arg_offset)}{_fmt_shift(self.shift)})"


@dataclass(frozen=True)
class ExpTerm:
    """q * r^s."""

    coeff: Fraction
    base: Fraction

    def __str__(self):
        pw = _fmt_pow(self.base).rstrip("*")
        return f"{_fmt_q(self.coeff)}{pw}" if pw else str(self.coeff)


Term = Union[ZetaTerm, ExpTerm]


def _fmt_q(q: Fraction) -> str:
    return "" if q == 1 else "-" if q == -1 else f"({q})*" if q.denominator != 1 else f"{q}*"


def _fmt_pow(g: Fraction) -> str:
    return "" if g == 1 else f"({g})^s*"


def _fmt_arg(alpha: int, beta: int) -> str:
    head = "s" if alpha == 1 else f"{alpha}s"
    return head if beta == 0 else f"{head}{beta:+d}"


def _fmt_shift(a: Fraction) -> str:
    return "" if a == 1 else f", {a}"


def _frac_pow(g: Fraction, e: Fraction) -> Fraction | None:
    """g**e exactly when the result is rational, else None."""
    if e.denominator == 1:
        return g ** int(e)
    if e.denominator != 2:
        return None
    rn, rd = math.isqrt(g.numerator), math.isqrt(g.denominator)
    if rn * rn != g.numerator or rd * rd != g.denominator:
        return None
    return Fraction(rn, rd) ** int(2 * e)


@dataclass(frozen=True)
class Pole:
    location: Fraction
    residue: BigReal
    residue_exact: Fraction | None = None


@dataclass(frozen=True)
class ZetaExpansion:
    terms: tuple
    manifold: Manifold | None = field(default=None, compare=False)

    @classmethod
    def canonical(cls, terms: Iterable[Term], manifold: Manifold | None = None) -> "ZetaExpansion":
        zeta: dict[tuple, Fraction] = {}
        exps: dict[Fraction, Fraction] = {}
        for t in terms:
            if isinstance(t, ZetaTerm):
                if t.base <= 0 or t.shift <= 0 or t.arg_scale not in (1, 2):
                    raise SpecDetError(f"invalid zeta term {t}")
                zeta[t.key] = zeta.get(t.key, Fraction(0)) + t.coeff
            else:
                if t.base <= 0:
                    raise SpecDetError(f"invalid exponential term {t}")
                exps[t.base] = exps.get(t.base, Fraction(0)) + t.coeff
        out: list[Term] = [
            ZetaTerm(q, key[3], key[1], key[2], key[0]) for key, q in sorted(zeta.items()) if q != 0
        ]
        out += [ExpTerm(q, r) for r, q in sorted(exps.items()) if q != 0]
        return cls(tuple(out), manifold)

    @property
    def zeta_terms(self) -> list[ZetaTerm]:
        return [t for t in self.terms if isinstance(t, ZetaTerm)]

    @property
    def exp_terms(self) -> list[ExpTerm]:
        return [t for t in self.terms if isinstance(t, ExpTerm)]

    # algebra -----------------------------------------------------------

    def __add__(self, other: "ZetaExpansion") -> "ZetaExpansion":
        return ZetaExpansion.canonical(self.terms + other.terms, self.manifold)

    def __sub__(self, other: "ZetaExpansion") -> "ZetaExpansion":
        return self + other.scaled(-1)

    def scaled(self, c) -> "ZetaExpansion":
        c = Fraction(c)
        out = []
        for t in self.terms:
            if isinstance(t, ZetaTerm):
                out.append(ZetaTerm(t.coeff * c, t.base, t.arg_scale, t.arg_offset, t.shift))
            else:
                out.append(ExpTerm(t.coeff * c, t.base))
        return ZetaExpansion.canonical(out, self.manifold)

    def substituted(self, c) -> "ZetaExpansion":
        """The expansion of s -> f(s - c); needs rational g^-c and integer alpha*c."""
        c = Fraction(c)
        out = []
        for t in self.terms:
            factor = _frac_pow(t.base, -c)
            if factor is None:
                raise SpecDetError(f"substitution s -> s - {c} leaves rational terms for base {t.base}")
            if isinstance(t, ZetaTerm):
                step = t.arg_scale * c
                if step.denominator != 1:
                    raise SpecDetError(f"substitution s -> s - {c} breaks the integer offset of {t}")
                out.append(ZetaTerm(t.coeff * factor, t.base, t.arg_scale, t.arg_offset - int(step), t.shift))
            else:
                out.append(ExpTerm(t.coeff * factor, t.base))
        return ZetaExpansion.canonical(out, self.manifold)

    def with_manifold(self, m: Manifold) -> "ZetaExpansion":
        return ZetaExpansion(self.terms, m)

    # analysis ----------------------------------------------------------

    def pole_candidates(self) -> list[Fraction]:
        return sorted({t.pole for t in self.zeta_terms})

    def residue_exact(self, s0: Fraction) -> Fraction | None:
        total = Fraction(0)
        for t in self.zeta_terms:
            if t.pole == s0:
                w = _frac_pow(t.base, s0)
                if w is None:
                    return None
                total += t.coeff * w / t.arg_scale
        return total

    def residue(self, s0, digits: int = 64) -> BigReal:
        s0 = Fraction(s0)
        exact = self.residue_exact(s0)
        if exact is not None:
            return BigReal.of(exact, digits)
        ctx = working_context(digits + GUARD_DIGITS)
        acc = ctx.zero
        for t in self.zeta_terms:
            if t.pole == s0:
                acc += to_mpf(t.coeff, ctx) * ctx.power(to_mpf(t.base, ctx), to_mpf(s0, ctx)) / t.arg_scale
        return BigReal(acc, digits)

    def _is_pole(self, s0: Fraction) -> bool:
        exact = self.residue_exact(s0)
        if exact is not None:
            return exact != 0
        r = self.residue(s0, 60)
        return abs(r.value) > r.value.context.mpf(10) ** -40

    def poles(self, digits: int = 64) -> list[Pole]:
        out = []
        for s0 in self.pole_candidates():
            if self._is_pole(s0):
                out.append(Pole(s0, self.residue(s0, digits), self.residue_exact(s0)))
        return out

    @property
    def mu(self) -> Fraction | None:
        """Rightmost pole, which is also the abscissa of convergence of the series."""
        locs = [s0 for s0 in self.pole_candidates() if self._is_pole(s0)]
        return max(locs) if locs else None

    def eval(self, s, digits: int = 64) -> BigReal:
        return evaluate(self, s, digits)

    def eval_deriv(self, s, digits: int = 64) -> BigReal:
        return evaluate_deriv(self, s, digits)

    def finite_part(self, m, digits: int = 64) -> BigReal:
        return finite_part(self, m, digits)

    def c_coefficient(self, m: int, digits: int = 64) -> BigReal:
        return c_coefficient(self, m, digits)

    def c_coefficient_limit(self, m: int, digits: int = 64) -> BigReal:
        return c_coefficient_limit(self, m, digits)

    def __str__(self):
        if not self.terms:
            return "0"
        text = " + ".join(str(t) for t in self.terms)
        return text.replace("+ -", "- ")


def _exp(q, r) -> ExpTerm:
    return ExpTerm(Fraction(q), Fraction(r))


def _zt(q, g, alpha: int, beta: int, a=1) -> ZetaTerm:
    return ZetaTerm(Fraction(q), Fraction(g), alpha, beta, Fraction(a))


def _tau(n: int) -> int:
    return 1 if n % 2 == 0 else 0


# closed forms -------------------------------------------------------------


def _explicit_sphere(d: int) -> list[Term]:
    terms: list[Term] = []
    if d % 2:
        n = (d - 1) // 2
        if n == 0:
            return [_zt(2, 1, 2, 0)]
        for i in range(1, n + 1):
            terms.append(_zt(comb.u_bar(n, i), 1, 2, -2 * i))
        terms.append(_exp(-1, Fraction(1, n * n)))
        return terms
    n = d // 2
    for i in range(1, n + 1):
        w = comb.v_bar(n, i)
        terms.append(_zt(w, 4, 2, 1 - 2 * i))
        terms.append(_zt(-w * Fraction(2) ** (2 * i - 1), 1, 2, 1 - 2 * i))
    terms.append(_exp(-1, Fraction(4, (2 * n - 1) ** 2)))
    return terms


def _explicit_hemisphere(d: int) -> list[Term]:
    terms: list[Term] = []
    if d % 2:
        n = (d + 1) // 2
        for i in range(1, n + 1):
            w = comb.u_bar(n - 1, i - 1) / 2
            terms.append(_zt(w, 1, 2, 2 - 2 * i))
            terms.append(_zt(-(n - 1) * w, 1, 2, 3 - 2 * i))
        return terms
    n = d // 2
    for i in range(1, n + 1):
        w = comb.v_bar(n, i)
        terms.append(_zt(w / 2, 4, 2, 1 - 2 * i))
        terms.append(_zt(-w * Fraction(2) ** (2 * i - 2), 1, 2, 1 - 2 * i))
        terms.append(_zt(-(2 * n - 1) * w / 2, 4, 2, 2 - 2 * i))
        terms.append(_zt((2 * n - 1) * w * Fraction(2) ** (2 * i - 3), 1, 2, 2 - 2 * i))
    return terms


def _explicit_projective(d: int) -> list[Term]:
    terms: list[Term] = []
    if d % 2:
        n = (d + 1) // 2
        tau = _tau(n)
        for i in range(1, n + 1):
            w = comb.u_bar(n - 1, i - 1)
            if tau:
                terms.append(_zt(w, 1, 2, 2 - 2 * i))
            terms.append(_zt(-((-1) ** n) * w * Fraction(2) ** (2 * i - 2), Fraction(1, 4), 2, 2 - 2 * i))
        if n > 1:
            terms.append(_exp(-1, Fraction(1, (n - 1) ** 2)))
        return terms
    n = d // 2
    a = Fraction(5, 4) + Fraction(_tau(n), 2)
    for i in range(1, n + 1):
        terms.append(_zt(comb.v_bar(n, i) * Fraction(2) ** (4 * i - 2), Fraction(1, 4), 2, 1 - 2 * i, a))
    if n > 2:
        terms.append(_exp(-1, Fraction(4, (2 * n - 1) ** 2)))
    return terms


def _explicit_oscillator(d: int) -> list[Term]:
    terms: list[Term] = []
    if d % 2 == 0:
        n = d // 2
        f = math.factorial(2 * n - 1)
        for i in range(1, n + 1):
            terms.append(_zt(Fraction(comb.u_row(n)[i], f), Fraction(1, 2), 1, 1 - 2 * i))
        return terms
    n = (d + 1) // 2
    f = 4**n * math.factorial(2 * n - 2)
    for i in range(1, n + 1):
        w = Fraction(comb.v_row(n)[i], f)
        terms.append(_zt(4 * w, 1, 1, 2 - 2 * i))
        terms.append(_zt(-w * 4**i, Fraction(1, 2), 1, 2 - 2 * i))
    return terms


_EXPLICIT = {
    Kind.SPHERE: _explicit_sphere,
    Kind.HEMISPHERE: _explicit_hemisphere,
    Kind.PROJECTIVE: _explicit_projective,
    Kind.OSCILLATOR: _explicit_oscillator,
}


@lru_cache(maxsize=512)
def explicit_build(m: Manifold) -> ZetaExpansion:
    """Expansion from the closed-form solution of the dimension recursion."""
    return ZetaExpansion.canonical(_EXPLICIT[m.kind](m.dim), m)


# recursions ---------------------------------------------------------------

_SEEDS: dict[Kind, dict[int, list[Term]]] = {
    Kind.SPHERE: {
        1: [_zt(2, 1, 2, 0)],
        2: [_zt(1, 4, 2, -1), _zt(-2, 1, 2, -1), _exp(-1, 4)],
    },
    Kind.HEMISPHERE: {
        1: [_zt(1, 1, 2, 0)],
        2: [
            _zt(Fraction(1, 2), 4, 2, -1),
            _zt(-1, 1, 2, -1),
            _zt(Fraction(-1, 2), 4, 2, 0),
            _zt(Fraction(1, 2), 1, 2, 0),
        ],
    },
    Kind.PROJECTIVE: {
        1: [_zt(2, Fraction(1, 4), 2, 0)],
        2: [_zt(4, Fraction(1, 4), 2, -1, Fraction(5, 4))],
        3: [_zt(1, 1, 2, -2), _zt(-4, Fraction(1, 4), 2, -2), _exp(-1, 1)],
        4: [
            _zt(Fraction(8, 3), Fraction(1, 4), 2, -3, Fraction(7, 4)),
            _zt(Fraction(-1, 6), Fraction(1, 4), 2, -1, Fraction(7, 4)),
        ],
    },
    Kind.OSCILLATOR: {
        1: [_zt(1, 1, 1, 0), _zt(-1, Fraction(1, 2), 1, 0)],
        2: [_zt(1, Fraction(1, 2), 1, -1)],
    },
}


def seed(kind: Kind, dim: int) -> ZetaExpansion:
    kind = Kind(kind)
    return ZetaExpansion.canonical(_SEEDS[kind][dim], Manifold(kind, dim))


def _step(kind: Kind, n: int, z: ZetaExpansion) -> ZetaExpansion:
    """One application of the recursion, from dimension n to the next dimension it reaches."""
    if kind is Kind.SPHERE:
        out = (z.substituted(1) - z.scaled(Fraction(n - 1, 2) ** 2)).scaled(Fraction(1, n * (n + 1)))
        return out + ZetaExpansion.canonical([_exp(-1, Fraction(4, (n + 1) ** 2))])
    if kind is Kind.HEMISPHERE:
        out = z.substituted(1) - z.substituted(Fraction(1, 2)) - z.scaled(Fraction(n * n - 1, 4))
        return out.scaled(Fraction(1, n * (n + 1)))
    if kind is Kind.PROJECTIVE:
        out = z.substituted(2) - z.substituted(1).scaled(Fraction(n * n + 1, 2)) + z.scaled(Fraction(n * n - 1, 4) ** 2)
        out = out.scaled(Fraction(1, n * (n + 1) * (n + 2) * (n + 3)))
        return out + ZetaExpansion.canonical([_exp(-1, Fraction(4, (n + 3) ** 2))])
    return z.substituted(2).scaled(Fraction(1, 4 * n * (n + 1))) - z.scaled(Fraction(n, 4 * (n + 1)))


def _stride(kind: Kind) -> int:
    return 4 if kind is Kind.PROJECTIVE else 2


@lru_cache(maxsize=512)
def recursive_build(m: Manifold) -> ZetaExpansion:
    """Expansion obtained by iterating the dimension recursion from its seeds."""
    stride = _stride(m.kind)
    if m.dim <= stride:
        return seed(m.kind, m.dim)
    prev = recursive_build(Manifold(m.kind, m.dim - stride))
    return _step(m.kind, m.dim - stride, prev).with_manifold(m)


# evaluation ---------------------------------------------------------------


def _as_fraction(s) -> Fraction | None:
    if isinstance(s, Fraction):
        return s
    if isinstance(s, bool):
        raise TypeError("booleans are not reals")
    if isinstance(s, (int, float)):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except ValueError:
            return None
    return None


def _locate(e: ZetaExpansion, s, digits: int):
    """(exact s or None, pole candidate hit by s or None)."""
    sf = _as_fraction(s)
    if sf is not None:
        return sf, (sf if sf in set(e.pole_candidates()) else None)
    ctx = working_context(digits + GUARD_DIGITS)
    sv = to_mpf(s, ctx)
    tol = ctx.mpf(10) ** (-digits)
    for s0 in e.pole_candidates():
        if abs(sv - to_mpf(s0, ctx)) <= tol:
            return None, s0
    return None, None


def _weight(t, s_exact: Fraction | None, sv, ctx):
    """q * g^s as an mpf."""
    if s_exact is not None:
        w = _frac_pow(t.base, s_exact)
        if w is not None:
            return to_mpf(t.coeff * w, ctx)
    return to_mpf(t.coeff, ctx) * ctx.power(to_mpf(t.base, ctx), sv)


def _parts(e: ZetaExpansion, s, digits: int, ctx, deriv: bool) -> list:
    s_exact, hit = _locate(e, s, digits)
    if hit is not None and e._is_pole(hit):
        raise PoleError(hit)
    sv = to_mpf(s if s_exact is None else s_exact, ctx)
    parts = []
    at_pole = []
    for t in e.terms:
        if isinstance(t, ExpTerm):
            w = _weight(t, s_exact, sv, ctx)
            parts.append(w * ctx.ln(to_mpf(t.base, ctx)) if deriv else w)
            continue
        if hit is not None and t.pole == hit:
            at_pole.append(t)
            continue
        x = t.arg_scale * sv + t.arg_offset
        w = _weight(t, s_exact, sv, ctx)
        if not deriv:
            parts.append(w * special.hurwitz_zeta_mpf(x, t.shift, ctx, digits))
            continue
        xe = None if s_exact is None else t.arg_scale * s_exact + t.arg_offset
        if xe is not None and t.shift == 1 and xe.denominator == 1 and xe <= 0:
            dz = special.zeta_prime_neg_int_mpf(-int(xe), ctx, digits)
        else:
            dz = special.hurwitz_zeta_deriv_mpf(x, t.shift, ctx, digits)
        lg = ctx.ln(to_mpf(t.base, ctx))
        z = special.hurwitz_zeta_mpf(x, t.shift, ctx, digits) if t.base != 1 else ctx.zero
        parts.append(w * (lg * z + t.arg_scale * dz))
    if at_pole:
        parts.extend(_removable_parts(at_pole, hit, ctx, deriv))
    return parts


def _removable_parts(terms: list[ZetaTerm], s0: Fraction, ctx, deriv: bool) -> list:
    """Limit contributions of terms whose poles cancel in aggregate at s0.

    Near s0, g^s zeta(alpha s + beta, a) = g^s0 [1/(alpha e) + ln g/alpha + g0(a)
    + e (ln g^2/(2 alpha) + ln g g0(a) - alpha g1(a)) + O(e^2)], with the Stieltjes
    constants g0(a) = -psi(a) and g1(a).
    """
    out = []
    groups: dict[tuple, object] = {}
    for t in terms:
        w = _weight(t, s0, to_mpf(s0, ctx), ctx)
        lg = ctx.ln(to_mpf(t.base, ctx))
        g0 = -special.digamma_rational_mpf(t.shift, ctx)
        if deriv:
            out.append(w * (lg * lg / (2 * t.arg_scale) + lg * g0))
            key = (t.shift, t.arg_scale)
            groups[key] = groups.get(key, ctx.zero) + w
        else:
            out.append(w * (lg / t.arg_scale + g0))
    tiny = ctx.mpf(10) ** (-(ctx.dps - 5))
    for (a, alpha), w in groups.items():
        if abs(w) > tiny:
            out.append(-alpha * w * ctx.stieltjes(1, to_mpf(a, ctx)))
    return out


def _adaptive(e: ZetaExpansion, s, digits: int, deriv: bool) -> BigReal:
    work = digits + GUARD_DIGITS
    for _ in range(8):
        ctx = working_context(work + 5)
        parts = _parts(e, s, work, ctx, deriv)
        total = ctx.fsum(parts)
        mag = max((abs(p) for p in parts), default=ctx.zero)
        scale = max(abs(total), ctx.one)
        loss = 0 if mag <= scale else math.ceil(float(ctx.log10(mag / scale)))
        if work - loss >= digits + 3:
            return BigReal(total, digits)
        work = digits + loss + GUARD_DIGITS
    return BigReal(total, digits)


def evaluate(e: ZetaExpansion, s, digits: int = 64) -> BigReal:
    """Value of the expansion at real s; PoleError at a pole."""
    return _adaptive(e, s, digits, deriv=False)


def evaluate_deriv(e: ZetaExpansion, s, digits: int = 64) -> BigReal:
    """s-derivative of the expansion at real s; PoleError at a pole."""
    return _adaptive(e, s, digits, deriv=True)


def finite_part(e: ZetaExpansion, m, digits: int = 64) -> BigReal:
    """Value at m if m is regular, else the limit of e(m + x) - residue/x as x -> 0."""
    m = Fraction(m)
    if m not in set(e.pole_candidates()):
        return evaluate(e, m, digits)
    work = digits + GUARD_DIGITS
    for _ in range(8):
        ctx = working_context(work + 5)
        parts = []
        singular = [t for t in e.zeta_terms if t.pole == m]
        rest = ZetaExpansion.canonical([t for t in e.terms if t not in singular])
        if rest.terms:
            parts.extend(_parts(rest, m, work, ctx, deriv=False))
        parts.extend(_removable_parts(singular, m, ctx, deriv=False))
        total = ctx.fsum(parts)
        mag = max((abs(p) for p in parts), default=ctx.zero)
        scale = max(abs(total), ctx.one)
        loss = 0 if mag <= scale else math.ceil(float(ctx.log10(mag / scale)))
        if work - loss >= digits + 3:
            break
        work = digits + loss + GUARD_DIGITS
    return BigReal(total, digits)


def c_coefficient(e: ZetaExpansion, m: int, digits: int = 64) -> BigReal:
    """Residue at the positive integer m times Gamma(m); zero when m is regular."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    m = Fraction(m)
    if m not in set(e.pole_candidates()) or not e._is_pole(m):
        return BigReal.of(0, digits)
    return e.residue(m, digits) * math.factorial(int(m) - 1)


def c_coefficient_limit(e: ZetaExpansion, m: int, digits: int = 64, eps: str = "1e-12") -> BigReal:
    """(-1)^m lim_{s->m} e(s)/Gamma(1-s) from a symmetric difference around m."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    ctx = working_context(digits + GUARD_DIGITS)
    h = ctx.mpf(eps)
    vals = []
    for s in (m + h, m - h):
        sv = BigReal(s, digits + GUARD_DIGITS)
        z = to_mpf(evaluate(e, sv, digits), ctx)
        vals.append(z * ctx.rgamma(1 - s))
    return BigReal((-1) ** m * (vals[0] + vals[1]) / 2, digits)
