from __future__ import annotations

import threading
from decimal import Decimal
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from specdet.numeric import (
    BigReal,
    big_real_from_rational,
    constant_euler_gamma,
    constant_glaisher,
    constant_pi,
    working_context,
)


def test_rational_examples():
    assert big_real_from_rational(Fraction(1, 3), 30).to_string(30) == "0." + "3" * 30
    assert big_real_from_rational(Fraction(0), 10).to_string() == "0"
    assert big_real_from_rational(Fraction(-14), 5).to_string(5) == "-14.000"


def test_constants():
    assert constant_pi(10).to_string(10) == "3.141592654"
    assert constant_euler_gamma(10).to_string(10) == "0.5772156649"
    # A = 1.28242712910062..., so ten significant digits end in ...129
    assert constant_glaisher(10).to_string(10) == "1.282427129"
    assert constant_glaisher(9).to_string(9) == "1.28242713"


def test_glaisher_two_paths():
    # ln A = 1/12 - zeta'(-1) against mpmath's own Glaisher constant
    ctx = working_context(80)
    assert abs(constant_glaisher(70).value - ctx.glaisher) < ctx.mpf(10) ** -68


@settings(max_examples=60, deadline=None)
@given(st.fractions(max_denominator=10**12).filter(lambda q: abs(q) < 10**12), st.integers(5, 80))
def test_round_trip(q, d):
    text = big_real_from_rational(q, d).to_string(d)
    assert abs(Fraction(Decimal(text)) - q) <= Fraction(10) ** (1 - d) * max(1, abs(q))


@settings(max_examples=40, deadline=None)
@given(*[st.fractions(min_value=-10**6, max_value=10**6, max_denominator=1000)] * 3)
def test_addition_laws(a, b, c):
    x, y, z = (BigReal.of(v, 40) for v in (a, b, c))
    tol = Fraction(1, 10**37) * max(1, abs(a) + abs(b) + abs(c))
    assert (x + y).is_close(y + x, tol)
    assert ((x + y) + z).is_close(x + (y + z), tol)


def test_precision_is_minimum():
    a = BigReal.of(1, 50)
    b = BigReal.of(2, 20)
    assert (a + b).digits == 20
    assert (a * b).digits == 20


def test_arithmetic_functions():
    x = BigReal.of(2, 40)
    assert x.ln().exp().is_close(2, Fraction(1, 10**38))
    assert (x ** Fraction(1, 2) * x ** Fraction(1, 2)).is_close(2, Fraction(1, 10**38))
    assert (1 / x).to_string(5) == "0.50000"
    assert (3 - x).to_string(3) == "1.00"


def test_half_even_rounding():
    assert BigReal.of("0.125", 30).to_string(2) == "0.12"
    assert BigReal.of("0.135", 30).to_string(2) == "0.14"


def test_contexts_are_thread_local():
    seen = {}

    def grab(name):
        seen[name] = working_context(33)

    threads = [threading.Thread(target=grab, args=(i,)) for i in range(3)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len({id(c) for c in seen.values()}) == 3
