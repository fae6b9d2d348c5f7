"""Sawtooth and periodized Bernoulli functions.

``psi_ell(l, u) = B_l(frac(u)) / l!`` is the 1-periodic extension of the
scaled Bernoulli polynomial; ``psi_ell(1, u)`` is the sawtooth away from the
integers.  Integer ``u`` maps to ``frac(u) = 0`` (right-continuous).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .exact_arith import bernoulli_polynomial

__all__ = [
    "MAX_FLOAT_ORDER",
    "psi_saw",
    "psi_ell",
    "psi_ell_exact",
    "psi_sup_bound",
    "scaled_bernoulli_coeffs",
]

# Highest order with a binary64 coefficient table.
MAX_FLOAT_ORDER = 128


def _check_order(ell: int) -> None:
    if not isinstance(ell, int) or ell < 1:
        raise ValueError(f"order must be an integer >= 1, got {ell!r}")


def _check_finite(u: float) -> None:
    if not math.isfinite(u):
        raise ValueError(f"argument must be finite, got {u!r}")


def psi_saw(u: float) -> float:
    """u - floor(u) - 1/2, with range [-1/2, 1/2)."""
    _check_finite(u)
    return (u - math.floor(u)) - 0.5


@lru_cache(maxsize=None)
def _scaled_bernoulli_exact(ell: int):
    return bernoulli_polynomial(ell) / math.factorial(ell)


@lru_cache(maxsize=None)
def scaled_bernoulli_coeffs(ell: int) -> tuple[float, ...]:
    """Binary64 coefficients of B_ell(x)/ell!, ascending in degree."""
    _check_order(ell)
    if ell > MAX_FLOAT_ORDER:
        raise ValueError(f"order {ell} exceeds the table cap {MAX_FLOAT_ORDER}")
    return tuple(float(c) for c in _scaled_bernoulli_exact(ell).coeffs)


def psi_ell(ell: int, u: float) -> float:
    """B_ell(frac(u)) / ell! evaluated by Horner's rule."""
    _check_order(ell)
    _check_finite(u)
    x = u - math.floor(u)
    if x >= 1.0:  # u a hair below an integer
        x = 0.0
    acc = 0.0
    for c in reversed(scaled_bernoulli_coeffs(ell)):
        acc = acc * x + c
    return acc


def psi_ell_exact(ell: int, u: Fraction) -> Fraction:
    """Exact B_ell(u) / ell! for rational 0 <= u < 1."""
    _check_order(ell)
    u = Fraction(u)
    if not 0 <= u < 1:
        raise ValueError(f"u must lie in [0, 1), got {u}; reduce mod 1 first")
    return _scaled_bernoulli_exact(ell)(u)


@lru_cache(maxsize=None)
def psi_sup_bound(ell: int) -> float:
    """Certified M_ell >= sup |psi_ell| for ell >= 2.

    From the Fourier expansion, |psi_ell| <= 2 zeta(ell) / (2 pi)**ell; zeta(ell)
    is over-estimated by a partial sum plus the integral tail.
    """
    _check_order(ell)
    if ell == 1:
        raise ValueError("the sawtooth (ell = 1) is bounded by 1/2; no Fourier bound")
    terms = 4096
    partial = math.fsum(n ** -float(ell) for n in range(1, terms + 1))
    tail = terms ** (1.0 - ell) / (ell - 1)
    zeta_upper = (partial + tail) * (1.0 + 8 * 2.0**-53)
    bound = 2.0 * zeta_upper / (2.0 * math.pi) ** ell * (1.0 + 8 * 2.0**-53)
    return math.nextafter(bound, math.inf)
