"""Exact combinatorial coefficients.

Stirling numbers of the first kind, central factorial numbers of the first
kind and their even/odd families, factorially normalized weights, Bernoulli
and harmonic numbers. All values are exact ``Fraction`` objects.

Rows are built by their defining recursions and cached; each family keeps a
list of rows that only ever grows, guarded by a lock, so lookups are
iterative and never hit the recursion limit.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable

Rational = Fraction

KINDS = ("stirling_s", "central_t", "u", "v", "u_bar", "v_bar")


class _RowCache:
    """Grow-only list of rows produced by ``step(previous_rows, n)``."""

    def __init__(self, seed: list[tuple], step: Callable[[list[tuple], int], tuple]):
        self._rows = list(seed)
        self._step = step
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple:
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(rows) <= n:
                rows.append(self._step(rows, len(rows)))
            return rows[n]


def _stirling_step(rows, n):
    prev = rows[n - 1]
    out = [0] * (n + 1)
    for k in range(1, n + 1):
        a = prev[k - 1]
        b = prev[k] if k < n else 0
        out[k] = a - (n - 1) * b
    return tuple(out)


def _central_step(rows, n):
    # t(n,k) = t(n-2,k-2) - ((n-2)/2)^2 t(n-2,k); t(n,0) = 0 for n >= 1
    prev = rows[n - 2]
    c = Fraction(n - 2, 2) ** 2
    out = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        a = prev[k - 2] if k >= 2 else 0
        b = prev[k] if k <= n - 2 else 0
        out[k] = a - c * b
    return tuple(out)


def _u_step(rows, n):
    prev = rows[n - 1]
    c = (n - 1) ** 2
    out = [0] * (n + 1)
    for k in range(1, n + 1):
        out[k] = prev[k - 1] - (c * prev[k] if k < n else 0)
    return tuple(out)


def _v_step(rows, n):
    prev = rows[n - 1]
    c = (2 * n - 3) ** 2
    out = [0] * (n + 1)
    for k in range(1, n + 1):
        out[k] = prev[k - 1] - (c * prev[k] if k < n else 0)
    return tuple(out)


_STIRLING = _RowCache([(1,)], _stirling_step)
_CENTRAL = _RowCache([(Fraction(1),), (Fraction(0), Fraction(1))], _central_step)
_U = _RowCache([(1,)], _u_step)
_V = _RowCache([(1,)], _v_step)


def stirling_row(n: int) -> tuple[int, ...]:
    """Signed Stirling numbers s(n, 0..n) as plain integers."""
    return _STIRLING.row(n)


def stirling_s1(n: int, k: int) -> Rational:
    """Coefficient of x^k in the falling factorial x(x-1)...(x-n+1)."""
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    return Fraction(_STIRLING.row(n)[k])


def central_t(n: int, k: int) -> Rational:
    """Coefficient of x^k in the central factorial x(x+n/2-1)...(x-n/2+1)."""
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    return _CENTRAL.row(n)[k]


def u_row(n: int) -> tuple[int, ...]:
    return _U.row(n)


def v_row(n: int) -> tuple[int, ...]:
    return _V.row(n)


def u(n: int, k: int) -> Rational:
    """Even-index central factorial numbers u(n,k) = t(2n,2k) (OEIS A008955)."""
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    return Fraction(_U.row(n)[k])


def v(n: int, k: int) -> Rational:
    """Odd-index central factorial numbers v(n,k) = 4^(n-k) t(2n-1,2k-1) (OEIS A008956)."""
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    return Fraction(_V.row(n)[k])


def u_bar(n: int, k: int) -> Rational:
    """2 u(n,k) / (2n)!; in particular u_bar(0,0) = 2."""
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    return Fraction(2 * _U.row(n)[k], factorial(2 * n))


def v_bar(n: int, k: int) -> Rational:
    """4^-(n-1) v(n,k) / (2n-1)!; zero for n = 0 and for k = 0."""
    if n < 1 or k < 1 or k > n:
        return Fraction(0)
    return Fraction(_V.row(n)[k], 4 ** (n - 1) * factorial(2 * n - 1))


_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(n: int) -> Rational:
    """Bernoulli numbers with B_1 = -1/2.

    Uses sum_{k<=n} C(n+1,k) B_k = 0; odd indices above 1 are zero.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n >= 3 and n % 2:
        return Fraction(0)
    if n < len(_BERNOULLI):
        return _BERNOULLI[n]
    with _BERNOULLI_LOCK:
        while len(_BERNOULLI) <= n:
            m = len(_BERNOULLI)
            if m >= 3 and m % 2:
                _BERNOULLI.append(Fraction(0))
                continue
            acc = Fraction(0)
            for k in range(m):
                bk = _BERNOULLI[k]
                if bk:
                    acc += comb(m + 1, k) * bk
            _BERNOULLI.append(-acc / (m + 1))
    return _BERNOULLI[n]


def harmonic(n: int) -> Rational:
    if n < 0:
        raise ValueError("n must be non-negative")
    return _harmonic_prefix(n)


_HARMONIC: list[Fraction] = [Fraction(0)]
_HARMONIC_LOCK = threading.Lock()


def _harmonic_prefix(n: int) -> Fraction:
    h = _HARMONIC
    if n < len(h):
        return h[n]
    with _HARMONIC_LOCK:
        while len(h) <= n:
            h.append(h[-1] + Fraction(1, len(h)))
    return h[n]


_ENTRY: dict[str, Callable[[int, int], Fraction]] = {
    "stirling_s": stirling_s1,
    "central_t": central_t,
    "u": u,
    "v": v,
    "u_bar": u_bar,
    "v_bar": v_bar,
}


@dataclass(frozen=True)
class CoeffTable:
    """All entries (n, k) with 0 <= k <= n <= max_n of one coefficient family."""

    kind: str
    max_n: int
    entries: dict[tuple[int, int], Fraction] = field(repr=False)

    @classmethod
    def build(cls, kind: str, max_n: int) -> "CoeffTable":
        if kind not in _ENTRY:
            raise ValueError(f"unknown coefficient kind {kind!r}; expected one of {KINDS}")
        if max_n < 0:
            raise ValueError("max_n must be non-negative")
        f = _ENTRY[kind]
        entries = {(n, k): f(n, k) for n in range(max_n + 1) for k in range(n + 1)}
        return cls(kind, max_n, entries)

    def row(self, n: int) -> list[Fraction]:
        return [self.entries[(n, k)] for k in range(n + 1)]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        n, k = key
        return self.entries.get((n, k), Fraction(0))


def coefficient(kind: str, n: int, k: int) -> Fraction:
    if kind not in _ENTRY:
        raise ValueError(f"unknown coefficient kind {kind!r}")
    return _ENTRY[kind](n, k)
