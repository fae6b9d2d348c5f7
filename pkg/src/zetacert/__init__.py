"""Hurwitz zeta, Dirichlet L-values and exact values at negative integers."""

from .characters import (
    DirichletCharacter,
    conjugate,
    enumerate_characters,
    gauss_sum,
    get_character,
    l_series,
)
from .em_engine import (
    EMParams,
    choose_params,
    hurwitz_zeta,
    hurwitz_zeta_deriv,
    riemann_zeta,
    tail_integral,
    zeta_deriv_neg,
)
from .errors import PrecisionInfeasible, ZetaDomainError, ZetaError
from .exact_arith import RationalPolynomial, bernoulli_number, bernoulli_polynomial, binomial
from .exact_values import (
    corollary1_residual,
    hurwitz_neg_poly,
    hurwitz_neg_poly_direct,
    hurwitz_neg_value,
    zeta_neg_int,
)
from .special_values import l_even_arg, l_odd_arg, zeta_odd

__version__ = "0.1.0"
