from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdt.exactmath import LaurentPoly, Q, RationalFunction
from qdt.hilbert import series_H
from qdt.plethystic import (
    NotIntegral,
    TruncSeries,
    big_psi,
    big_psi_inv,
    euler_product,
    pleth_exp,
    pleth_log,
    product_expansion,
    q_moebius_forward,
    q_moebius_invert,
    series_adams,
    series_exp,
    series_log,
    series_mul,
)
from strategies import laurent

N = 7


@st.composite
def series(draw, order: int = N, constant: int = 0):
    coeffs = [constant] + [draw(laurent(-2, 2, 3)) for _ in range(order - 1)]
    return TruncSeries(coeffs, order)


def t(k: int = 1, coeff=1, order: int = N) -> TruncSeries:
    return TruncSeries.t(order, k, coeff)


def geometric(order: int = N) -> TruncSeries:
    return TruncSeries([1] * order, order)


def exp_by_powers(f: TruncSeries) -> TruncSeries:
    """sum f^k / k!, a second route to the formal exponential."""
    out = TruncSeries.one(f.order)
    power = TruncSeries.one(f.order)
    for k in range(1, f.order):
        power = power * f
        out = out + power * Fraction(1, math.factorial(k))
    return out


# series arithmetic --------------------------------------------------------------


def test_mul_examples():
    one = TruncSeries.one(N)
    assert series_mul(one + t(), one - t()) == one - t(2)
    f = TruncSeries([1, Q, 2, Q**-1], N)
    assert series_mul(f, one) == f
    assert series_mul(geometric(), one - t()) == one


def test_mixed_orders_truncate():
    f = TruncSeries([1, 1, 1], 3) * TruncSeries([1, 1, 1, 1, 1], 5)
    assert f.order == 3


def test_exp_log_examples():
    assert series_exp(TruncSeries([0], N)) == TruncSeries.one(N)
    assert series_log(geometric()) == TruncSeries([0] + [Fraction(1, n) for n in range(1, N)], N)


def test_exp_log_preconditions():
    with pytest.raises(ValueError):
        series_exp(TruncSeries.one(N))
    with pytest.raises(ValueError):
        series_log(t())
    with pytest.raises(ValueError):
        big_psi(TruncSeries.one(N))
    with pytest.raises(ValueError):
        pleth_log(t())


@settings(max_examples=25, deadline=None)
@given(series())
def test_exp_matches_power_sum(f):
    assert series_exp(f) == exp_by_powers(f)


@settings(max_examples=25, deadline=None)
@given(series())
def test_log_exp_round_trip(f):
    assert series_log(series_exp(f)) == f


def test_adams_examples():
    assert series_adams(t(), 3) == t(3)
    assert series_adams(t(1, Q), 2) == t(2, Q**2)
    f = TruncSeries([1, Q, 3 - Q], N)
    assert series_adams(f, 1) == f


@settings(max_examples=25, deadline=None)
@given(series(constant=1), series(constant=2), st.integers(1, 3))
def test_adams_ring_homomorphism(f, g, i):
    assert series_adams(f * g, i) == series_adams(f, i) * series_adams(g, i)


def test_big_psi_examples():
    assert big_psi(t()) == TruncSeries([0] + [Fraction(1, i) for i in range(1, N)], N)
    assert big_psi_inv(TruncSeries([0, 1, Fraction(1, 2)], 3)) == t(order=3)


@settings(max_examples=25, deadline=None)
@given(series())
def test_big_psi_inverse_pair(f):
    assert big_psi_inv(big_psi(f)) == f
    assert big_psi(big_psi_inv(f)) == f


# plethystic Exp / Log --------------------------------------------------------------


def test_pleth_exp_examples():
    assert pleth_exp(t()) == geometric()
    direct = TruncSeries([1, 0, Q, 0, Q**2, 0, Q**3], N)  # 1/(1 - q t^2)
    assert pleth_exp(t(2, Q)) == direct


@settings(max_examples=20, deadline=None)
@given(series())
def test_pleth_log_exp_round_trip(f):
    assert pleth_log(pleth_exp(f)) == f


@settings(max_examples=20, deadline=None)
@given(series(), series())
def test_pleth_exp_is_homomorphism(f, g):
    assert pleth_exp(f + g) == pleth_exp(f) * pleth_exp(g)


def test_product_expansion_examples():
    assert product_expansion(geometric()) == {(1, 0): 1}
    g = euler_product({(1, 1): 1, (2, 0): 2}, N)
    assert product_expansion(g) == {(1, 1): 1, (2, 0): 2}
    with pytest.raises(NotIntegral) as err:
        product_expansion(series_H(2, N))
    assert err.value.degree == 1
    assert err.value.coefficient == RationalFunction(1, 1 - Q**-1)


@settings(max_examples=20, deadline=None)
@given(
    st.dictionaries(
        st.tuples(st.integers(1, N - 1), st.integers(-2, 2)), st.integers(-3, 3), max_size=5
    )
)
def test_product_expansion_recovers_exponents(c):
    c = {key: v for key, v in c.items() if v}
    assert product_expansion(euler_product(c, N)) == c
    # the two routes from exponent tables to series agree
    gen = TruncSeries.one(N) * 0
    for (n, k), v in c.items():
        gen = gen + t(n, LaurentPoly.monomial(k, v))
    assert pleth_exp(gen) == euler_product(c, N)


# q-Moebius inversion ----------------------------------------------------------------


def test_q_moebius_examples():
    g = {n: Q**n * Fraction(1, n) for n in range(1, 9)}
    f = q_moebius_invert(g, 8)
    assert f[1] == Q
    assert all(f[n] == 0 for n in range(2, 9))
    zero = q_moebius_invert({n: LaurentPoly() for n in range(1, 6)}, 5)
    assert all(v == 0 for v in zero.values())


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.lists(laurent(-2, 2, 3), min_size=n, max_size=n))))
def test_q_moebius_round_trip(data):
    n, polys = data
    f = {i + 1: p for i, p in enumerate(polys)}
    assert q_moebius_invert(q_moebius_forward(f, n), n) == f
    assert q_moebius_forward(q_moebius_invert(f, n), n) == f


# rendering ------------------------------------------------------------------------------


def test_text_rendering():
    assert series_H(2, 2).to_text() == "1 + (1/(1-q^-1))*t + O(t^2)"
    assert TruncSeries([1, -1, 0, 2], 4).to_text() == "1 - t + 2*t^3 + O(t^4)"


def test_json_round_trip():
    f = series_H(3, 4)
    assert TruncSeries.from_json(f.to_json()) == f
    # 1/(1 - q^-1) = q/(q - 1)
    assert f.to_json()[1] == {"num": [[1, "1"]], "den": [[0, "-1"], [1, "1"]]}
