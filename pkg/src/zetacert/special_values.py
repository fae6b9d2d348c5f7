"""Odd zeta values and L-values of opposite parity through zeta'(-k, a).

* zeta(2m+1) = (-1)**m 2**(2m+1) pi**(2m) / (2m)! * zeta'(-2m)
* L(2m+1, chi), chi even primitive:
      (-1)**m 2**(2m+1) pi**(2m) / (tau(conj chi) (2m)!) * sum_a conj chi(a) zeta'(-2m, a/q)
* L(2m, chi), chi odd primitive:
      i (-1)**(m+1) 2**(2m) pi**(2m-1) / (tau(conj chi) (2m-1)!) * sum_a conj chi(a) zeta'(1-2m, a/q)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .characters import DirichletCharacter, conjugate, gauss_sum
from .em_engine import MIN_TARGET, zeta_deriv_neg
from .errors import PrecisionInfeasible, ZetaDomainError

__all__ = ["SpecialValueRequest", "zeta_odd", "l_odd_arg", "l_even_arg", "evaluate"]

_EPS = 2.0**-52


@dataclass(frozen=True)
class SpecialValueRequest:
    kind: str  # "zeta-odd" | "L-odd-arg" | "L-even-arg"
    m: int
    character: Optional[DirichletCharacter] = None

    def __post_init__(self):
        if self.kind == "zeta-odd":
            if self.m < 1 or self.character is not None:
                raise ZetaDomainError("zeta-odd needs m >= 1 and no character")
        elif self.kind == "L-odd-arg":
            if self.m < 0 or self.character is None:
                raise ZetaDomainError("L-odd-arg needs m >= 0 and a character")
        elif self.kind == "L-even-arg":
            if self.m < 1 or self.character is None:
                raise ZetaDomainError("L-even-arg needs m >= 1 and a character")
        else:
            raise ZetaDomainError(f"unknown kind {self.kind!r}")


def _check_target(target: float) -> None:
    if not target >= MIN_TARGET:
        raise PrecisionInfeasible(f"target below {MIN_TARGET:g}")


def zeta_odd(m: int, target_abs_error: float = 1e-10, *, return_error: bool = False):
    """zeta(2m+1) for m >= 1 as a multiple of zeta'(-2m)."""
    if not isinstance(m, int) or m < 1:
        raise ZetaDomainError("zeta_odd needs an integer m >= 1")
    _check_target(target_abs_error)
    factor = (-1) ** m * 2.0 ** (2 * m + 1) * math.pi ** (2 * m) / math.factorial(2 * m)
    inner = max(target_abs_error / abs(factor), MIN_TARGET)
    deriv, err = zeta_deriv_neg(2 * m, 1.0, inner, return_error=True)
    value = factor * deriv
    err = abs(factor) * err + 4 * _EPS * abs(value)
    return (value, err) if return_error else value


def _check_character(chi: DirichletCharacter, parity: str) -> None:
    if chi.parity != parity:
        raise ZetaDomainError(f"character mod {chi.modulus} index {list(chi.index)} is {chi.parity}, need {parity}")
    if not chi.is_primitive:
        raise ZetaDomainError(
            f"character mod {chi.modulus} index {list(chi.index)} is imprimitive (conductor {chi.conductor})"
        )


def _derivative_sum(chi: DirichletCharacter, k: int, factor: complex, target: float):
    """factor / tau(conj chi) * sum_a conj chi(a) zeta'(-k, a/q), with error."""
    bar = conjugate(chi)
    tau = gauss_sum(bar)
    q = chi.modulus
    units = [a for a in range(1, q + 1) if bar.angle(a) is not None]
    weight = abs(factor) / abs(tau)
    inner = max(target / (weight * len(units)), MIN_TARGET)
    total = 0j
    err = 0.0
    # Fixed ascending order in a keeps the result reproducible.
    for a in units:
        d, e = zeta_deriv_neg(k, a / q, inner, return_error=True)
        total += bar(a) * d
        err += e
    value = factor / tau * total
    err = weight * err + 8 * _EPS * weight * sum(1 for _ in units) * max(abs(total), 1.0)
    return value, err


def l_odd_arg(m: int, chi: DirichletCharacter, target_abs_error: float = 1e-10, *,
              return_error: bool = False):
    """L(2m+1, chi) for an even primitive character.

    The trivial character mod 1 delegates to :func:`zeta_odd` for m >= 1; at
    m = 0 it would be the divergent zeta(1) and is rejected.
    """
    if not isinstance(m, int) or m < 0:
        raise ZetaDomainError("l_odd_arg needs an integer m >= 0")
    _check_target(target_abs_error)
    _check_character(chi, "even")
    if chi.modulus == 1:
        if m == 0:
            raise ZetaDomainError("L(1, chi_0) = zeta(1) diverges")
        value, err = zeta_odd(m, target_abs_error, return_error=True)
        return (complex(value), err) if return_error else complex(value)
    factor = (-1) ** m * 2.0 ** (2 * m + 1) * math.pi ** (2 * m) / math.factorial(2 * m)
    value, err = _derivative_sum(chi, 2 * m, factor, target_abs_error)
    return (value, err) if return_error else value


def l_even_arg(m: int, chi: DirichletCharacter, target_abs_error: float = 1e-10, *,
               return_error: bool = False):
    """L(2m, chi) for an odd primitive character, m >= 1."""
    if not isinstance(m, int) or m < 1:
        raise ZetaDomainError("l_even_arg needs an integer m >= 1")
    _check_target(target_abs_error)
    _check_character(chi, "odd")
    factor = 1j * (-1) ** (m + 1) * 2.0 ** (2 * m) * math.pi ** (2 * m - 1) / math.factorial(2 * m - 1)
    value, err = _derivative_sum(chi, 2 * m - 1, factor, target_abs_error)
    return (value, err) if return_error else value


def evaluate(request: SpecialValueRequest, target_abs_error: float = 1e-10):
    """Dispatch a request; returns (value, error_bound)."""
    if request.kind == "zeta-odd":
        return zeta_odd(request.m, target_abs_error, return_error=True)
    if request.kind == "L-odd-arg":
        return l_odd_arg(request.m, request.character, target_abs_error, return_error=True)
    return l_even_arg(request.m, request.character, target_abs_error, return_error=True)
