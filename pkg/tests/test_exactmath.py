from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qdt.exactmath import (
    LaurentPoly,
    NotDivisible,
    NotLaurent,
    Q,
    RationalFunction,
    binomial,
    cyclotomic,
    divisors,
    factorize,
    laurent_adams,
    laurent_div_exact,
    laurent_mul,
    moebius,
    signed_moebius_sum,
)
from strategies import laurent, polynomial


# number theory -------------------------------------------------------------


@pytest.mark.parametrize("a,b,expected", [(3, 1, 3), (7, 3, 35), (0, 0, 1), (2, 5, 0)])
def test_binomial(a, b, expected):
    assert binomial(a, b) == expected


def test_binomial_rejects_negative():
    with pytest.raises(ValueError):
        binomial(-1, 0)


@pytest.mark.parametrize("n,expected", [(1, 1), (6, 1), (12, 0), (2, -1), (30, -1), (49, 0)])
def test_moebius(n, expected):
    assert moebius(n) == expected


def test_moebius_rejects_zero():
    with pytest.raises(ValueError):
        moebius(0)


def _moebius_naive(n: int) -> int:
    primes = [p for p in range(2, n + 1) if n % p == 0 and all(p % r for r in range(2, p))]
    if any(n % (p * p) == 0 for p in primes):
        return 0
    return (-1) ** len(primes)


@pytest.mark.parametrize("n", range(1, 121))
def test_moebius_against_trial_division(n):
    assert moebius(n) == _moebius_naive(n)
    assert divisors(n) == tuple(d for d in range(1, n + 1) if n % d == 0)


@pytest.mark.parametrize("n", range(1, 200))
def test_moebius_sum_over_divisors(n):
    assert sum(moebius(d) for d in divisors(n)) == (1 if n == 1 else 0)


def test_factorize():
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    assert factorize(1) == ()
    assert factorize(97) == ((97, 1),)


def test_signed_moebius_sum_examples():
    f = {1: 7, 2: 11}
    assert signed_moebius_sum(f, 2, 1, 3) == 0
    assert signed_moebius_sum(f, 2, 1, 2) == -7
    g = {1: 3, 2: -5, 4: 8}
    assert signed_moebius_sum(g, 4, 2, 2) == 0


def test_signed_moebius_sum_accepts_callable():
    assert signed_moebius_sum(lambda d: d * d, 6, 3, 2) == signed_moebius_sum({1: 1, 2: 4, 3: 9, 6: 36}, 6, 3, 2)


@pytest.mark.parametrize("n,s", [(4, 3), (4, 4), (6, 0)])
def test_signed_moebius_sum_rejects_bad_divisor(n, s):
    with pytest.raises(ValueError):
        signed_moebius_sum({d: 1 for d in range(1, 7)}, n, s, 2)


def test_signed_moebius_sum_vanishing_pattern():
    rng = random.Random(7)
    for n in range(2, 31):
        for s in divisors(n)[:-1]:
            for m in range(1, 5):
                for _ in range(5):
                    f = {d: rng.randint(-20, 20) for d in divisors(n)}
                    val = signed_moebius_sum(f, n, s, m)
                    if m % 2 == 0 and n % 2 == 0 and s == n // 2 and s % 2 == 1:
                        assert val == -Fraction(sum(moebius(s // d) * f[d] for d in divisors(s)), s)
                    else:
                        assert val == 0


# Laurent polynomials ---------------------------------------------------------


def test_laurent_mul_examples():
    qi = Q**-1
    assert laurent_mul(Q + qi, Q - qi) == Q**2 - Q**-2
    f = 3 * Q**2 - qi
    assert laurent_mul(f, LaurentPoly.constant(1)) == f
    assert laurent_mul(1 + Q, 1 + Q**2) == LaurentPoly.qint(4)


def test_laurent_div_exact_examples():
    assert laurent_div_exact(Q**3 + Q**2 + Q, 1 + Q + Q**2) == Q
    assert laurent_div_exact(1 - Q**2, 1 - Q) == 1 + Q
    with pytest.raises(NotDivisible):
        laurent_div_exact(Q + 2, 1 + Q)


def test_laurent_adams_examples():
    f = Q + Q**-1
    assert laurent_adams(f, 2) == Q**2 + Q**-2
    assert laurent_adams(f, 1) == f
    assert laurent_adams(LaurentPoly.qint(2), 2) == 1 + Q**2


def test_text_and_json():
    f = LaurentPoly({-2: 1, 0: 3, 1: 2})
    assert f.to_text() == "q^-2 + 3 + 2*q"
    assert f.to_json() == [[-2, "1"], [0, "3"], [1, "2"]]
    assert LaurentPoly.from_json(f.to_json()) == f
    assert LaurentPoly({1: -1, 0: Fraction(1, 2)}).to_text() == "1/2 - q"
    assert LaurentPoly().to_text() == "0"


def test_no_zero_coefficients_stored():
    f = (1 + Q) - Q
    assert f.coeffs() == {0: 1}
    assert LaurentPoly({3: 0}).is_zero()


def test_predicates():
    f = LaurentPoly({-1: 1, 2: Fraction(1, 2)})
    assert not f.is_integral() and not f.is_polynomial()
    assert (1 + Q).is_integral() and (1 + Q).is_polynomial()


def test_evaluation():
    assert LaurentPoly.qint(4)(1) == 4
    assert (Q + Q**-1)(2) == Fraction(5, 2)


def test_cyclotomic():
    assert cyclotomic(1) == Q - 1
    assert cyclotomic(6) == Q**2 - Q + 1
    assert cyclotomic(12) == Q**4 - Q**2 + 1


@given(laurent(), laurent(nonzero=True))
def test_div_exact_inverts_mul(f, g):
    assert (f * g).div_exact(g) == f


@given(laurent(), laurent(), st.integers(1, 4))
def test_adams_is_multiplicative(f, g, i):
    assert (f * g).adams(i) == f.adams(i) * g.adams(i)


@given(laurent(), st.integers(1, 4), st.integers(1, 4))
def test_adams_composes(f, i, j):
    assert f.adams(i).adams(j) == f.adams(i * j)


@given(laurent(), laurent(), laurent())
def test_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == 0


# rational functions ------------------------------------------------------------


def _to_sympy(r: RationalFunction):
    x = sympy.Symbol("q")
    return sum(c * x**e for e, c in r.num.items()) / sum(c * x**e for e, c in r.den.items())


def test_rational_canonical_form():
    r = RationalFunction(1 - Q**2, 2 - 2 * Q)
    assert r.num == 1 + Q and r.den == 2
    half = RationalFunction.coerce(Fraction(1, 2))
    assert half.num == 1 and half.den == 2
    neg = RationalFunction(1, -1 - Q)
    assert neg.den.items()[-1][1] > 0


def test_rational_text():
    assert RationalFunction(1, 1 - Q**-1).to_text() == "1/(1 - q^-1)"
    assert RationalFunction(1 + Q).to_text() == "1 + q"


def test_to_laurent():
    assert RationalFunction(Q**3 - Q, Q**2).to_laurent() == Q - Q**-1
    with pytest.raises(NotLaurent):
        RationalFunction(1, 1 - Q).to_laurent()


def test_rational_json_round_trip():
    r = RationalFunction(3 + Q, 1 - Q**-2)
    assert RationalFunction.from_json(r.to_json()) == r


@settings(max_examples=60, deadline=None)
@given(polynomial(), polynomial(nonzero=True), polynomial(), polynomial(nonzero=True))
def test_rational_arithmetic_matches_sympy(a, b, c, d):
    x = sympy.Symbol("q")
    r, s = RationalFunction(a, b), RationalFunction(c, d)
    assert sympy.simplify(_to_sympy(r + s) - (_to_sympy(r) + _to_sympy(s))) == 0
    assert sympy.simplify(_to_sympy(r * s) - _to_sympy(r) * _to_sympy(s)) == 0
    # reduced: numerator and denominator coprime over Q
    for t in (r + s, r * s):
        num = sympy.Poly(sum((cf * x**e for e, cf in t.num.items()), sympy.Integer(0)), x)
        den = sympy.Poly(sum(cf * x**e for e, cf in t.den.items()), x)
        assert sympy.gcd(num, den).degree() <= 0


@given(polynomial(nonzero=True), polynomial(nonzero=True), st.integers(1, 3))
def test_rational_adams(a, b, i):
    r = RationalFunction(a, b)
    assert r.adams(i) == RationalFunction(a.adams(i), b.adams(i))


@given(polynomial(nonzero=True), polynomial(nonzero=True))
def test_rational_inverse(a, b):
    r = RationalFunction(a, b)
    assert r * r.inverse() == 1
