"""Exact values of the Hurwitz zeta function at non-positive integers.

zeta(-m, a) is a polynomial of degree m + 1 in a.  Two independent
constructions are provided:

* :func:`hurwitz_neg_poly` solves the triangular recurrence
  ``sum_{k<M} C(M, k) zeta(-k, a) + a**M = 1/(M + 1)`` for M = 1, 2, ...
* :func:`hurwitz_neg_poly_direct` expands
  ``sum_{k<=m} C(m, k) zeta(-k) a**(m-k) + a**m - a**(m+1)/(m + 1)``
  from the Riemann constants zeta(-k).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

from .exact_arith import RationalPolynomial, to_rational

__all__ = [
    "zeta_neg_int",
    "hurwitz_neg_poly",
    "hurwitz_neg_poly_direct",
    "hurwitz_neg_value",
    "corollary1_residual",
    "upper_sum_range",
]


def _check_order(m: int) -> None:
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"m must be an integer >= 0, got {m!r}")


class _RecurrenceCache:
    """Growable table of the recurrence solutions P_0, P_1, ..."""

    def __init__(self):
        self._polys: list[RationalPolynomial] = []
        self._lock = threading.Lock()

    def get(self, m: int) -> RationalPolynomial:
        if m < len(self._polys):
            return self._polys[m]
        with self._lock:
            polys = list(self._polys)
            for top in range(len(polys), m + 1):
                # Row M = top + 1 determines P_top (its coefficient C(M, top) = M).
                M = top + 1
                rhs = RationalPolynomial([Fraction(1, M + 1)]) - RationalPolynomial.monomial(M)
                for k in range(top):
                    rhs = rhs - polys[k] * comb(M, k)
                polys.append(rhs / M)
            if len(polys) > len(self._polys):
                self._polys = polys
            return polys[m]


_recurrence = _RecurrenceCache()


def hurwitz_neg_poly(m: int) -> RationalPolynomial:
    """Polynomial P_m with zeta(-m, a) = P_m(a), via the recurrence."""
    _check_order(m)
    return _recurrence.get(m)


def zeta_neg_int(m: int) -> Fraction:
    """zeta(-m) as an exact rational (the recurrence at a = 1)."""
    _check_order(m)
    return hurwitz_neg_poly(m)(Fraction(1))


def hurwitz_neg_poly_direct(m: int) -> RationalPolynomial:
    """The same polynomial built term-by-term from the constants zeta(-k)."""
    _check_order(m)
    coeffs = [Fraction(0)] * (m + 2)
    for k in range(m + 1):
        coeffs[m - k] += comb(m, k) * zeta_neg_int(k)
    coeffs[m] += 1
    coeffs[m + 1] -= Fraction(1, m + 1)
    return RationalPolynomial(coeffs)


def hurwitz_neg_value(m: int, alpha) -> Fraction:
    """Exact zeta(-m, alpha) for rational (or binary64, taken exactly) alpha."""
    return hurwitz_neg_poly(m)(to_rational(alpha))


def upper_sum_range(N: int, alpha: Fraction) -> range:
    """Integers n >= 0 with n <= N - alpha (n = 0..N-1 when 0 < alpha <= 1)."""
    top = N - alpha
    if top < 0:
        return range(0)
    return range(int(top // 1) + 1)


def corollary1_residual(m: int, N: int, alpha) -> Fraction:
    """Residual of the finite-N identity linking P_0..P_{m-1}; exactly 0.

    sum_{0<=n<=N-a} (n+a)**m - N**(m+1)/(m+1) + sum_{l<m} C(m,l) zeta(-l,a) N**(m-l)
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be an integer >= 1")
    if not isinstance(N, int) or N < 1:
        raise ValueError("N must be an integer >= 1")
    alpha = to_rational(alpha)
    if not 0 < alpha <= 1:
        raise ValueError("alpha must lie in (0, 1]")
    total = sum(((n + alpha) ** m for n in upper_sum_range(N, alpha)), Fraction(0))
    total -= Fraction(N ** (m + 1), m + 1)
    for ell in range(m):
        total += comb(m, ell) * hurwitz_neg_poly(ell)(alpha) * N ** (m - ell)
    return total
