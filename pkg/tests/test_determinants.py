from __future__ import annotations

import warnings

import pytest

from specdet.determinants import (
    Method,
    det_closed_form,
    det_lowdim_constant,
    det_table,
    det_voros,
    direct_series_zeta,
    zeta_prime_closed_form,
)
from specdet.errors import ConvergenceTooSlow, OutOfRange
from specdet.expansion import Kind, Manifold, explicit_build

from conftest import mp_ctx, reference_rows, within_last_digit


def prefix(r, places=6):
    return r.det.to_string(places + 2)


@pytest.mark.parametrize(
    "kind,dim,printed",
    [
        ("sphere", 7, "1.222521"),
        ("hemisphere", 2, "0.713127"),
        ("sphere", 2, "3.195311"),
        ("hemisphere", 5, "1.126034"),
        ("projective", 2, "2.240353"),
        ("sphere", 10, "0.896183"),
    ],
)
def test_printed_values(kind, dim, printed):
    assert within_last_digit(printed, det_closed_form(Manifold(Kind(kind), dim), 30).det.to_string(20))


def test_dimension_one(oracle):
    pi = oracle.pi
    cases = {"sphere": 4 * pi**2, "hemisphere": 2 * pi, "projective": pi**2}
    for kind, want in cases.items():
        r = det_closed_form(kind, 50, dim=1)
        assert abs(r.det.value - want) < oracle.mpf(10) ** -48
    assert abs(zeta_prime_closed_form("sphere", 40, dim=1).value + 2 * oracle.ln(2 * pi)) < oracle.mpf(10) ** -38


def test_result_invariants():
    r = det_closed_form(Manifold(Kind.HEMISPHERE, 9), 40)
    assert r.method is Method.CLOSED_FORM
    assert r.det.value > 0
    ctx = mp_ctx(60)
    assert abs(ctx.exp(-r.log_det_negated.value) - r.det.value) < ctx.mpf(10) ** -39


def test_sphere_three_exact(oracle):
    want = oracle.pi * oracle.exp(oracle.zeta(3) / (2 * oracle.pi**2))
    assert abs(det_closed_form("sphere", 64, dim=3).det.value - want) < oracle.mpf(10) ** -60


@pytest.mark.parametrize("dim", range(2, 10))
def test_lowdim_constants(dim):
    a = det_lowdim_constant(dim, 64)
    b = det_closed_form(Manifold(Kind.SPHERE, dim), 64)
    assert a.method is Method.LOW_DIM
    assert abs(a.det.value - b.det.value) < 1e-40


def test_lowdim_printed():
    for dim, printed in [(2, "3.195311"), (3, "3.338851"), (4, "1.736943"), (9, "0.946733")]:
        assert within_last_digit(printed, det_lowdim_constant(dim, 30).det.to_string(20))


def test_lowdim_range():
    for dim in (1, 10):
        with pytest.raises(OutOfRange):
            det_lowdim_constant(dim)


@pytest.mark.parametrize("kind,dim", [("sphere", 2), ("sphere", 3), ("hemisphere", 4), ("projective", 5), ("hemisphere", 7)])
def test_voros_matches_closed_form(kind, dim):
    m = Manifold(Kind(kind), dim)
    v = det_voros(m, 40)
    c = det_closed_form(m, 40)
    assert v.method is Method.VOROS
    assert abs(v.log_det_negated.value - c.log_det_negated.value) < 1e-35
    assert float(v.tail_bound.value) < 1e-40


def test_voros_trivial_shift():
    m = Manifold(Kind.SPHERE, 1)
    assert abs(det_voros(m, 30).det.value - det_closed_form(m, 30).det.value) < 1e-28


def test_voros_series_terms_floor():
    with pytest.raises(ValueError):
        det_voros(Manifold(Kind.SPHERE, 6), 30, series_terms=5)


def test_direct_series_examples(oracle):
    r = direct_series_zeta(Manifold(Kind.SPHERE, 1), 2, K=2000, digits=30)
    assert abs(r.value - 2 * oracle.zeta(4)) < 1e-10
    r = direct_series_zeta(Manifold(Kind.OSCILLATOR, 2), 4, K=2000, digits=30)
    assert abs(r.value - oracle.zeta(3) / 16) < 1e-10
    m = Manifold(Kind.SPHERE, 4)
    r = direct_series_zeta(m, 5, K=100_000, digits=30)
    assert abs(float((r - explicit_build(m).eval(5, 30)).value)) < 1e-10


def test_direct_series_guards():
    m = Manifold(Kind.SPHERE, 6)
    with pytest.raises(ValueError):
        direct_series_zeta(m, 3, K=1000)
    with pytest.raises(ConvergenceTooSlow):
        direct_series_zeta(m, "3.6", K=1000, tol="1e-30")


def test_table_order_and_workers():
    serial = det_table("all", 6, 30)
    assert [(r.manifold.kind, r.manifold.dim) for r in serial] == [
        (k, d) for k in (Kind.SPHERE, Kind.HEMISPHERE, Kind.PROJECTIVE) for d in range(1, 7)
    ]
    pooled = det_table("all", 6, 30, workers=3)
    assert [r.det.to_string(30) for r in pooled] == [r.det.to_string(30) for r in serial]


def test_table_endpoints():
    rows = reference_rows()
    assert within_last_digit(rows[99]["hemisphere"], det_table("hemisphere", 100, 30)[-1].det.to_string(20))
    assert within_last_digit(rows[98]["projective"], det_table("projective", 99, 30)[-1].det.to_string(20))


def test_oscillator_table_positive():
    vals = det_table("oscillator", 10, 30)
    assert all(r.det.value > 0 for r in vals)
    assert abs(vals[0].det.value - mp_ctx(40).sqrt(2)) < 1e-28


def test_sphere_trend_soft():
    vals = [r.det.value for r in det_table("sphere", 40, 20)]
    odd, even = vals[2::2], vals[1::2]
    if not all(a > b for a, b in zip(odd, odd[1:])) or not all(a > b for a, b in zip(even, even[1:])):
        warnings.warn("sphere determinants are not monotone along a parity branch")


@pytest.mark.slow
def test_full_sweep():
    for kind in ("sphere", "hemisphere", "projective"):
        out = det_table(kind, 10_000, 20, workers=4)
        assert len(out) == 10_000 and all(r.det.value > 0 for r in out)
