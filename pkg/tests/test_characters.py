import math
from fractions import Fraction
from math import gcd

import pytest

from oracles import OracleBudget, alternating_series, direct_l_sum
from zetacert.characters import (
    MAX_MODULUS,
    character_group,
    conjugate,
    cyclotomic_polynomial,
    enumerate_characters,
    factorize,
    gauss_sum,
    get_character,
    l_series,
    root_of_unity_sum,
)
from zetacert.em_engine import riemann_zeta
from zetacert.errors import ZetaDomainError


def phi(q):
    return sum(1 for a in range(1, q + 1) if gcd(a, q) == 1)


def values_mod(chi):
    q = chi.modulus
    return [chi(a % q) if a % q else chi(q) for a in range(q)]


# -- enumeration ---------------------------------------------------------------

def test_mod_one():
    (chi,) = enumerate_characters(1)
    assert chi.is_principal and chi.is_even and chi.conductor == 1
    assert chi(1) == 1 and chi(5) == 1


def test_mod_four():
    chis = enumerate_characters(4)
    assert len(chis) == 2
    principal, chi4 = chis
    assert principal.is_principal and principal.conductor == 1
    assert chi4(3) == -1 and chi4.conductor == 4 and chi4.parity == "odd"
    assert chi4(2) == 0 and chi4.value(2) is None


def test_mod_five():
    chis = enumerate_characters(5)
    assert len(chis) == 4
    real = [c for c in chis if c.is_real and not c.is_principal]
    assert len(real) == 1
    assert real[0].is_even and real[0].conductor == 5


@pytest.mark.parametrize("q", [1, 2, 3, 4, 8, 9, 12, 16, 24, 25, 27, 60, 97, 128, 210])
def test_count_and_distinct(q):
    chis = enumerate_characters(q)
    assert len(chis) == phi(q)
    assert len({c.angles for c in chis}) == len(chis)
    assert [c.index for c in chis] == sorted(c.index for c in chis)


def test_index_lookup():
    chi = enumerate_characters(12)[3]
    assert get_character(12, chi.index) == chi
    with pytest.raises(ZetaDomainError):
        get_character(12, [0])
    with pytest.raises(ZetaDomainError):
        get_character(5, [4])
    with pytest.raises(ZetaDomainError):
        enumerate_characters(0)
    with pytest.raises(ZetaDomainError):
        enumerate_characters(MAX_MODULUS + 1)


def test_factorize_and_group():
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert factorize(1) == []
    g = character_group(8)
    assert g.order == 4
    assert sorted(g.orders) == [2, 2]


@pytest.mark.parametrize("q", range(1, 61))
def test_multiplicative_exact(q):
    for chi in enumerate_characters(q):
        assert chi.value(1) == (0, 1)
        for a in range(1, q + 1):
            assert (chi.value(a) is None) == (gcd(a, q) > 1)
            for b in range(1, q + 1):
                x, y = chi.angle(a), chi.angle(b)
                ab = chi.angle(a * b)
                if x is None or y is None:
                    assert ab is None
                else:
                    assert ab == (x + y) % 1


# -- invariants for q <= 60 ----------------------------------------------------

def test_orthogonality_exact():
    for q in range(1, 61):
        for chi in enumerate_characters(q):
            angles = [chi.angle(a) for a in range(1, q + 1) if chi.angle(a) is not None]
            _, coeffs = root_of_unity_sum(angles)
            if chi.is_principal:
                assert coeffs != ()
            else:
                assert coeffs == ()


def test_gauss_modulus():
    for q in range(1, 61):
        for chi in enumerate_characters(q):
            if chi.is_primitive:
                assert abs(abs(gauss_sum(chi)) - math.sqrt(q)) <= 1e-10


def test_conductor_correct():
    for q in range(1, 61):
        for chi in enumerate_characters(q):
            d = chi.conductor
            assert q % d == 0
            # constant on classes mod d among units
            seen = {}
            for a in range(1, q + 1):
                if gcd(a, q) == 1:
                    assert seen.setdefault(a % d, chi.angle(a)) == chi.angle(a)
            # and d is least: no proper divisor works
            for e in range(1, d):
                if q % e or d % e:
                    continue
                seen = {}
                ok = all(seen.setdefault(a % e, chi.angle(a)) == chi.angle(a)
                         for a in range(1, q + 1) if gcd(a, q) == 1)
                assert not ok


def test_parity_split():
    for q in range(3, 61):
        chis = enumerate_characters(q)
        even = sum(1 for c in chis if c.is_even)
        assert even == len(chis) - even == phi(q) // 2
        for c in chis:
            assert c.is_even == (c.angle(q - 1) == 0)


def test_cyclotomic():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert root_of_unity_sum([Fraction(0), Fraction(1, 3), Fraction(2, 3)])[1] == ()


# -- Gauss sums and conjugation ------------------------------------------------

def test_gauss_examples():
    assert gauss_sum(get_character(1, [])) == 1
    chi4 = enumerate_characters(4)[1]
    tau = gauss_sum(chi4)
    assert abs(tau - 2j) <= 1e-15
    quad = next(c for c in enumerate_characters(5) if c.is_real and not c.is_principal)
    assert abs(gauss_sum(quad) - math.sqrt(5)) <= 1e-12


def test_gauss_against_float_sum():
    import cmath
    for q in (7, 12, 15, 16):
        for chi in enumerate_characters(q):
            ref = sum(chi(a) * cmath.exp(2j * math.pi * a / q) for a in range(1, q + 1))
            assert abs(gauss_sum(chi) - ref) <= 1e-12


def test_conjugate():
    for q in (5, 7, 12, 13):
        for chi in enumerate_characters(q):
            bar = conjugate(chi)
            assert conjugate(bar) == chi
            assert bar.conductor == chi.conductor and bar.parity == chi.parity
            if chi.is_real:
                assert bar == chi
            for a in range(1, q + 1):
                if chi.angle(a) is None:
                    assert bar.angle(a) is None
                else:
                    assert (chi.angle(a) + bar.angle(a)) % 1 == 0


def test_json_schema():
    chi4 = enumerate_characters(4)[1]
    assert chi4.to_json() == {
        "q": 4, "index": [1], "conductor": 4, "parity": "odd",
        "values": [[0, 1], None, [1, 2], None],
    }


# -- L-series ------------------------------------------------------------------

@pytest.mark.parametrize("s", [2, 0.5 + 3j, -1.5])
def test_l_series_mod_one_is_zeta(s):
    chi = get_character(1, [])
    a, ea = l_series(s, chi, 1e-11, return_error=True)
    b, eb = riemann_zeta(s, 1e-11, return_error=True)
    assert abs(a - b) <= ea + eb


def test_l_one_chi4():
    chi4 = enumerate_characters(4)[1]
    value = l_series(1, chi4, 1e-10)
    assert abs(value - 0.785398163397448) <= 1e-10
    # Leibniz series with an averaged tail
    ref, ref_err = alternating_series(lambda k: 1 / (2 * k + 1), 2000)
    assert abs(value - ref) <= 1e-10 + ref_err


def test_l_two_quadratic_five():
    quad = next(c for c in enumerate_characters(5) if c.is_real and not c.is_principal)
    value, err = l_series(2, quad, 1e-10, return_error=True)
    ref, ref_err = direct_l_sum(2, values_mod(quad), OracleBudget(10**5))
    assert abs(value - ref) <= 1e-10 + ref_err


@pytest.mark.parametrize("q", [3, 7, 8, 12])
@pytest.mark.parametrize("s", [1, 0.5 + 2j, 3])
def test_l_series_against_block_sum(q, s):
    for chi in enumerate_characters(q):
        if chi.is_principal:
            continue
        value, err = l_series(s, chi, 1e-10, return_error=True)
        ref, ref_err = direct_l_sum(s, values_mod(chi), OracleBudget(10**5))
        assert abs(value - ref) <= err + ref_err


def test_l_series_principal_pole():
    with pytest.raises(ZetaDomainError):
        l_series(1, enumerate_characters(5)[0])


def test_imprimitive_principal_euler_factor():
    # principal mod 6: zeta(s) (1 - 2**-s)(1 - 3**-s)
    chi0 = enumerate_characters(6)[0]
    s = 2.5
    value, err = l_series(s, chi0, 1e-11, return_error=True)
    ref = riemann_zeta(s, 1e-12) * (1 - 2**-s) * (1 - 3**-s)
    assert abs(value - ref) <= err + 1e-12
