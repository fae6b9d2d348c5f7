import json
from fractions import Fraction

import pytest

from zetacert.exact_arith import RationalPolynomial, bernoulli_polynomial, binomial
from zetacert.exact_values import (
    corollary1_residual,
    hurwitz_neg_poly,
    hurwitz_neg_poly_direct,
    hurwitz_neg_value,
    upper_sum_range,
    zeta_neg_int,
)

ALPHAS = [Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(1, 7), Fraction(355, 452)]


def test_zeta_neg_int_examples():
    assert zeta_neg_int(0) == Fraction(-1, 2)
    assert zeta_neg_int(1) == Fraction(-1, 12)
    assert zeta_neg_int(2) == 0
    assert zeta_neg_int(3) == Fraction(1, 120)


def test_poly_examples():
    p0 = RationalPolynomial([Fraction(1, 2), -1])
    p1 = RationalPolynomial([Fraction(-1, 12), Fraction(1, 2), Fraction(-1, 2)])
    assert hurwitz_neg_poly(0) == p0 == hurwitz_neg_poly_direct(0)
    assert hurwitz_neg_poly(1) == p1 == hurwitz_neg_poly_direct(1)
    assert hurwitz_neg_poly_direct(3)(Fraction(1)) == Fraction(1, 120)


@pytest.mark.parametrize("m", range(31))
def test_routes_and_bernoulli_agree(m):
    p = hurwitz_neg_poly(m)
    assert p.degree == m + 1
    assert p == hurwitz_neg_poly_direct(m)
    assert p == -bernoulli_polynomial(m + 1) / (m + 1)
    assert p(Fraction(1)) == zeta_neg_int(m)


@pytest.mark.parametrize("m", range(1, 25))
def test_recurrence_polynomial_identity(m):
    total = RationalPolynomial.monomial(m) - Fraction(1, m + 1)
    for k in range(m):
        total = total + hurwitz_neg_poly(k) * binomial(m, k)
    assert total == RationalPolynomial()


def test_identity_residual_examples():
    assert corollary1_residual(1, 1, Fraction(1)) == 0
    assert corollary1_residual(5, 7, Fraction(1, 3)) == 0
    assert corollary1_residual(12, 3, Fraction(1, 2)) == 0


def test_identity_residual_grid():
    for m in range(1, 21):
        for N in range(1, 11):
            for a in ALPHAS:
                assert corollary1_residual(m, N, a) == 0


def test_identity_residual_is_sensitive():
    # Perturbing one P_l breaks the identity, so the residual is not vacuous.
    a, N, m = Fraction(1, 3), 4, 3
    wrong = corollary1_residual(m, N, a) + binomial(m, 1) * Fraction(1, 10**6) * N ** (m - 1)
    assert wrong != 0


def test_identity_residual_validation():
    with pytest.raises(ValueError):
        corollary1_residual(0, 1, Fraction(1))
    with pytest.raises(ValueError):
        corollary1_residual(1, 1, Fraction(3, 2))


def test_upper_sum_range():
    assert list(upper_sum_range(3, Fraction(1))) == [0, 1, 2]
    assert list(upper_sum_range(3, Fraction(1, 4))) == [0, 1, 2]


def test_value_and_json():
    assert hurwitz_neg_value(3, Fraction(1, 2)) == Fraction(-7, 960)
    record = json.loads(json.dumps(hurwitz_neg_poly(4).to_json(m=4)))
    assert record["m"] == 4
    assert RationalPolynomial.from_json(record) == hurwitz_neg_poly(4)
