from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import sympy_scaled_bernoulli
from zetacert.exact_arith import (
    RationalPolynomial,
    bernoulli_number,
    bernoulli_polynomial,
    binomial,
)


def pascal(n):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


@pytest.mark.parametrize("n,k,expected", [(0, 0, 1), (5, 2, 10), (30, 15, 155117520), (3, 5, 0)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_matches_pascal():
    for n in range(40):
        assert [binomial(n, k) for k in range(n + 1)] == pascal(n)


def test_bernoulli_examples():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(12) == Fraction(-691, 2730)


def test_bernoulli_recurrence_closure():
    for n in range(1, 60):
        assert sum(binomial(n + 1, k) * bernoulli_number(k) for k in range(n + 1)) == 0


def test_odd_bernoulli_vanish():
    for n in range(3, 80, 2):
        assert bernoulli_number(n) == 0


def test_bernoulli_polynomial_examples():
    assert bernoulli_polynomial(0) == RationalPolynomial([1])
    assert bernoulli_polynomial(1) == RationalPolynomial([Fraction(-1, 2), 1])
    assert bernoulli_polynomial(2) == RationalPolynomial([Fraction(1, 6), -1, 1])


@pytest.mark.parametrize("ell", range(0, 40))
def test_bernoulli_polynomial_degree_and_sympy(ell):
    p = bernoulli_polynomial(ell)
    assert p.degree == ell
    fact = 1
    for k in range(2, ell + 1):
        fact *= k
    assert RationalPolynomial(c * fact for c in sympy_scaled_bernoulli(ell)) == p


def test_endpoint_difference():
    for ell in range(1, 40):
        p = bernoulli_polynomial(ell)
        assert p(Fraction(1)) - p(Fraction(0)) == (1 if ell == 1 else 0)


def test_derivative_identity():
    for ell in range(0, 40):
        assert bernoulli_polynomial(ell + 1).derivative() == bernoulli_polynomial(ell) * (ell + 1)


fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 100)
polys = st.lists(fractions, max_size=6).map(RationalPolynomial)


@given(polys, polys, fractions)
def test_ring_operations_commute_with_evaluation(p, q, x):
    assert (p + q)(x) == p(x) + q(x)
    assert (p * q)(x) == p(x) * q(x)
    assert (p - q)(x) == p(x) - q(x)


@given(polys, fractions, fractions)
def test_shift(p, c, x):
    assert p.shift(c)(x) == p(x + c)


def test_zero_polynomial_and_formatting():
    z = RationalPolynomial([0, 0])
    assert z.coeffs == () and z.degree == -1 and z(Fraction(3)) == 0
    assert str(RationalPolynomial([Fraction(-1, 12), Fraction(1, 2), Fraction(-1, 2)])) == "-1/12 + 1/2·α - 1/2·α²"


def test_json_round_trip():
    p = bernoulli_polynomial(7)
    assert RationalPolynomial.from_json(p.to_json(m=6)) == p
