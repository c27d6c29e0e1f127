from __future__ import annotations

import csv
from decimal import Decimal
from fractions import Fraction
from pathlib import Path

import mpmath
import pytest

DATA = Path(__file__).parent / "data"


def mp_ctx(dps: int):
    ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


def frac_mpf(ctx, q):
    q = Fraction(q)
    return ctx.mpf(q.numerator) / q.denominator


def reference_rows() -> list[dict]:
    with open(DATA / "reference_dets.csv", newline="") as fh:
        return list(csv.DictReader(fh))


def within_last_digit(printed: str, value_text: str) -> bool:
    """True when value rounds to within one unit in the last printed place."""
    exp = Decimal(printed)
    unit = Decimal(1).scaleb(exp.as_tuple().exponent)
    got = Decimal(value_text).quantize(unit)
    return abs(got - exp) <= unit


@pytest.fixture(scope="session")
def oracle():
    """Independent mpmath context at 100 digits."""
    return mp_ctx(100)
