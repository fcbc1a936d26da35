import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from circpat.errors import SingularDivisionError, UnsupportedDivisionError
from circpat.series import (ONE, U, ZERO, UPoly, ZSeries, add, derive, div, eval_numeric,
                            exp0, first_divergence, integrate, ln1, mul)

import oracles

Z = ZSeries([0, 1], 6)


# -- UPoly --

def test_upoly_normal_form():
    p = UPoly([Fraction(2, 4), 0, 0])
    assert p.coeffs == (Fraction(1, 2),)
    assert p.degree == 0
    assert UPoly([0, 0]).is_zero() and UPoly([0, 0]).degree == -1
    assert UPoly([1, 2]) == UPoly([Fraction(2, 2), Fraction(4, 2)])


def test_upoly_text():
    assert str(UPoly([3, 2, 1])) == "u^2 + 2u + 3"
    assert str(UPoly([Fraction(1, 6), Fraction(-1, 6)])) == "-(1/6)u + 1/6"
    assert str(ZERO) == "0"
    assert str(UPoly([0, -1])) == "-u"


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
upolys = st.lists(rationals, max_size=5).map(UPoly)


@given(upolys, upolys, upolys)
def test_upoly_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(st.lists(rationals, max_size=5), st.lists(rationals, max_size=5))
def test_upoly_mul_matches_reference(a, b):
    if not a or not b:
        return
    assert (UPoly(a) * UPoly(b)) == UPoly(oracles.poly_mul(a, b))


@given(upolys, rationals)
def test_upoly_eval(p, x):
    assert p(x) == sum(c * x ** k for k, c in enumerate(p.coeffs))


def test_upoly_json_pairs():
    p = UPoly([Fraction(1, 2), 0, -3])
    assert p.to_pairs() == [[0, "1/2"], [2, "-3/1"]]
    assert UPoly.from_pairs(p.to_pairs()) == p


# -- ZSeries basics --

def test_geometric_series():
    g = div(ZSeries.constant(1, 5), ZSeries([1, -1], 5))
    assert g == ZSeries([1] * 6)


def test_mul_example():
    assert mul(ZSeries([1, 1], 4), ZSeries([1, -1], 4)) == ZSeries([1, 0, -1], 4)


def test_div_example_from_monotone_omega():
    omega = ZSeries([1, -1, 0, (1 - U) / 6], 3)
    P = 1 / omega
    assert P[3] == (5 + U) / 6
    assert P.egf_row(3) == UPoly([5, 1])


def test_division_errors():
    with pytest.raises(SingularDivisionError):
        div(ZSeries.constant(1, 3), ZSeries([0, 1], 3))
    with pytest.raises(UnsupportedDivisionError):
        div(ZSeries.constant(1, 3), ZSeries([U + 1, 1], 3))


def test_division_by_rational_constant():
    q = div(ZSeries.constant(1, 4), ZSeries([2, -2], 4))
    assert q == ZSeries([Fraction(1, 2)] * 5)


def test_mixed_order_truncates():
    f = ZSeries([1, 1, 1], 2)
    g = ZSeries([1, 2, 3, 4, 5], 4)
    assert (f + g).order == 2
    assert mul(f, g).order == 2
    assert (f * g)[2] == UPoly([1 + 2 + 3])


def test_derive_and_integrate():
    assert derive(ZSeries([1, 1, 1], 2)) == ZSeries([1, 2], 1)
    assert integrate(ZSeries.constant(1, 0)) == ZSeries([0, 1], 1)
    C = ZSeries([1, 1, Fraction(1, 2), (1 + U) / 6], 3)
    assert derive(C)[2] == (1 + U) / 2


def test_ln_and_exp_examples():
    N = 6
    f = div(ZSeries.constant(1, N), ZSeries([1, -1], N))
    assert ln1(f) == ZSeries([0] + [Fraction(1, n) for n in range(1, N + 1)], N)
    assert exp0(ZSeries([0, 1], N)) == ZSeries([Fraction(1, math.factorial(n))
                                                for n in range(N + 1)])


def test_ln_exp_preconditions():
    with pytest.raises(ValueError):
        ln1(ZSeries([2, 1], 3))
    with pytest.raises(ValueError):
        exp0(ZSeries([1, 1], 3))


def test_eval_numeric():
    assert eval_numeric(ZSeries([1, 1], 3), 0.3, 0.5) == 1.5
    assert abs(eval_numeric(exp0(ZSeries([0, 1], 12)), 0.0, 0.1) - math.exp(0.1)) < 1e-12
    assert eval_numeric(ZSeries([U, U * U], 1), 2.0, 1.0) == 6.0


def test_first_divergence():
    a = ZSeries([1, 2, 3])
    assert first_divergence(a, a) is None
    assert first_divergence(a, ZSeries([1, 2, 4])) == 2


def test_json_round_trip():
    f = ZSeries([1, (1 + U) / 2, ZERO, U * U / 3], 4)
    obj = f.to_json_obj()
    assert obj["order"] == 4
    assert obj["coeffs"][1] == [1, [[0, "1/2"], [1, "1/2"]]]
    assert ZSeries.from_json_obj(obj) == f


def test_subs_u():
    f = ZSeries([1, U + 1, U * U], 2)
    assert f.subs_u(2) == ZSeries([1, 3, 4])


# -- algebraic laws --

ORDER = 5
series = st.lists(upolys, min_size=ORDER + 1, max_size=ORDER + 1).map(
    lambda cs: ZSeries(cs, ORDER))
unit_series = series.map(lambda f: ZSeries([ONE] + list(f.coeffs[1:]), ORDER))
zero_const = series.map(lambda f: ZSeries([ZERO] + list(f.coeffs[1:]), ORDER))


@settings(max_examples=40, deadline=None)
@given(series, series, series)
def test_series_ring_laws(f, g, h):
    assert add(f, g) == add(g, f)
    assert mul(f, g) == mul(g, f)
    assert mul(mul(f, g), h) == mul(f, mul(g, h))
    assert mul(f, add(g, h)) == add(mul(f, g), mul(f, h))


@settings(max_examples=40, deadline=None)
@given(series, unit_series)
def test_div_inverts_mul(f, g):
    assert div(mul(f, g), g) == f
    assert mul(g, div(ZSeries.constant(1, ORDER), g)) == ZSeries.constant(1, ORDER)


@settings(max_examples=30, deadline=None)
@given(unit_series, zero_const)
def test_exp_ln_inverse(f, g):
    assert exp0(ln1(f)) == f
    assert ln1(exp0(g)) == g


@settings(max_examples=40, deadline=None)
@given(series)
def test_derive_integrate(f):
    assert derive(integrate(f)) == f
    assert integrate(f)[0] == ZERO
