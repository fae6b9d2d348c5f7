"""Euler-Maclaurin evaluation of zeta(s, a) and its s-derivative.

With integers N >= 1, r >= 0 and 0 < a <= 1, valid for Re(s) > -r::

    zeta(s, a) = sum_{n<N} (n+a)**-s + N**(1-s)/(s-1)
                 + sum_{l=0}^{r} (-1)**l / l! * P_l(s) * N**(-s-l) * zeta(-l, a)
                 - P_{r+1}(s) * int_N^oo psi_{r+1}(u-a) u**(-s-r-1) du

where P_l(s) = s(s+1)...(s+l-1).  The remainder integral is dropped and
bounded by |P_{r+1}(s)| M_{r+1} N**(-sigma-r) / (sigma+r).  The derivative is
the term-by-term s-derivative, in which the two integrals that remain are
evaluated by repeated integration by parts (see :func:`weighted_tail_integral`).

All numeric work is binary64.  Each evaluator can report a certified error
bound: the dropped remainder plus a rounding slack proportional to the
magnitude of the summed terms.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .errors import PrecisionInfeasible, ZetaDomainError
from .exact_values import hurwitz_neg_poly
from .periodized import MAX_FLOAT_ORDER, psi_ell_exact, psi_sup_bound, scaled_bernoulli_coeffs

__all__ = [
    "EMParams",
    "MIN_TARGET",
    "choose_params",
    "remainder_bound",
    "hurwitz_zeta",
    "hurwitz_zeta_deriv",
    "riemann_zeta",
    "tail_integral",
    "weighted_tail_integral",
    "zeta_deriv_neg",
]

MIN_TARGET = 1e-13
MAX_DEPTH = 60
MAX_SPLIT = 10**6
EPS = 2.0**-52
# Rounding slack multiplier applied to sums of term magnitudes.
_SLACK = 16.0


@dataclass(frozen=True)
class EMParams:
    """Truncation pair (N, r) and the certified bound on the dropped remainder."""

    N: int
    r: int
    tail_bound: float

    def __post_init__(self):
        if self.N < 1 or self.r < 0:
            raise ValueError("need N >= 1 and r >= 0")
        if not (self.tail_bound >= 0 and math.isfinite(self.tail_bound)):
            raise ValueError("tail_bound must be finite and non-negative")


def _as_complex(s) -> complex:
    z = complex(s)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ZetaDomainError(f"s must be finite, got {s!r}")
    return z


def _check_target(target: float) -> None:
    if not target >= MIN_TARGET:
        raise PrecisionInfeasible(
            f"target {target!r} is below the binary64 floor {MIN_TARGET:g}"
        )


def _sup_psi(ell: int) -> float:
    return 0.5 if ell == 1 else psi_sup_bound(ell)


def _log_abs_rising(s: complex, count: int) -> float:
    """log |s (s+1) ... (s+count-1)|; -inf if a factor vanishes."""
    acc = 0.0
    for j in range(count):
        f = abs(s + j)
        if f == 0.0:
            return -math.inf
        acc += math.log(f)
    return acc


def _log_remainder_bound(s: complex, N: int, r: int) -> float:
    sigma = s.real
    return (
        _log_abs_rising(s, r + 1)
        + math.log(_sup_psi(r + 1))
        - (sigma + r) * math.log(N)
        - math.log(sigma + r)
    )


def remainder_bound(s, N: int, r: int) -> float:
    """|P_{r+1}(s)| M_{r+1} N**(-sigma-r) / (sigma+r); requires sigma + r > 0."""
    s = _as_complex(s)
    if s.real + r <= 0:
        raise ZetaDomainError(f"need Re(s) + r > 0, got Re(s)={s.real}, r={r}")
    lb = _log_remainder_bound(s, N, r)
    return 0.0 if lb == -math.inf else math.exp(min(lb, 700.0))


def _magnitude_estimate(s: complex, N: int) -> float:
    # Rough size of sum_{n<N} |(n+a)**-s| + |N**(1-s)/(s-1)| for a ~ 1.
    sigma = s.real
    if abs(1.0 - sigma) < 1e-9:
        head = 1.0 + math.log(N)
    else:
        head = 1.0 + abs(N ** (1.0 - sigma) - 1.0) / abs(1.0 - sigma)
    pole = N ** (1.0 - sigma) / max(abs(s - 1.0), 1e-300)
    return (head + pole) * (1.0 + abs(s) * math.log(N + 1.0))


def _plan(s: complex, target: float) -> EMParams:
    sigma = s.real
    r_min = max(0, math.floor(-sigma) + 1)
    best = None
    for r in range(r_min, MAX_DEPTH + 1):
        c = sigma + r
        if c <= 0:
            continue
        lb1 = _log_remainder_bound(s, 1, r)
        if lb1 == -math.inf:
            N = 1
        else:
            need = (lb1 - math.log(target)) / c
            if need > math.log(MAX_SPLIT) + 1:
                continue
            N = 1 if need <= 0 else math.ceil(math.exp(need))
        while N > 1 and _log_remainder_bound(s, N - 1, r) <= math.log(target):
            N -= 1
        while N <= MAX_SPLIT and _log_remainder_bound(s, N, r) > math.log(target):
            N += 1
        if N > MAX_SPLIT:
            continue
        slack = _SLACK * EPS * _magnitude_estimate(s, N)
        tail = remainder_bound(s, N, r)
        work = N + r * N
        # Prefer plans whose rounding slack also fits the target.
        key = (0 if tail + slack <= target else 1, work if tail + slack <= target else slack, work)
        if best is None or key < best[0]:
            best = (key, EMParams(N, r, tail))
    if best is None:
        raise PrecisionInfeasible(f"no (N, r) with r <= {MAX_DEPTH}, N <= {MAX_SPLIT} reaches {target:g} at s={s}")
    return best[1]


def choose_params(s, target_abs_error: float) -> EMParams:
    """Plan (N, r) whose certified remainder bound is <= target_abs_error."""
    s = _as_complex(s)
    _check_target(target_abs_error)
    if s == 1:
        raise ZetaDomainError("s = 1 is the pole of zeta(s, a)")
    return _plan(s, target_abs_error)


@lru_cache(maxsize=4096)
def _em_coefficient(ell: int, alpha: float) -> float:
    """(-1)**l zeta(-l, a) / l!, exact at the binary64 a and rounded once."""
    value = hurwitz_neg_poly(ell)(Fraction(alpha)) / factorial(ell)
    return float(-value if ell % 2 else value)


@lru_cache(maxsize=4096)
def _psi_at_minus_alpha(ell: int, alpha: float) -> float:
    """psi_ell(N - a) = psi_ell(-a), exact at the binary64 a, rounded once."""
    u = -Fraction(alpha)
    return float(psi_ell_exact(ell, u - math.floor(u)))


def _rising_with_derivative(s: complex, count: int):
    """Lists P_l(s) and P_l'(s) for l = 0..count, with P_0 = 1, P_0' = 0."""
    p, dp = [1 + 0j], [0j]
    for j in range(count):
        dp.append(dp[-1] * (s + j) + p[-1])
        p.append(p[-1] * (s + j))
    return p, dp


def _check_alpha(alpha) -> float:
    a = float(alpha)
    if not (math.isfinite(a) and a > 0):
        raise ZetaDomainError(f"alpha must be a finite positive number, got {alpha!r}")
    return a


def _reduce_alpha(alpha: float):
    """Split a > 1 into a' in (0, 1] and K = ceil(a) - 1."""
    K = max(0, math.ceil(alpha) - 1)
    return alpha - K, K


def _regular_part(s: complex, alpha: float, params: EMParams):
    """Expansion without the N**(1-s)/(s-1) term; returns (value, magnitude)."""
    N, r = params.N, params.r
    terms = [(n + alpha) ** -s for n in range(N)]
    log_n = math.log(N)
    n_pow = cmath.exp(-s * log_n)
    p, _ = _rising_with_derivative(s, r)
    for ell in range(r + 1):
        terms.append(_em_coefficient(ell, alpha) * p[ell] * n_pow * N ** -ell)
    value = complex(
        math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms)
    )
    magnitude = math.fsum(abs(t) for t in terms)
    return value, magnitude


def _pole_term(s: complex, N: int) -> complex:
    return cmath.exp((1 - s) * math.log(N)) / (s - 1)


def _slack(s: complex, N: int, magnitude: float) -> float:
    return _SLACK * EPS * magnitude * (1.0 + abs(s) * math.log(N + 1.0))


def _hurwitz_pole_free(s: complex, alpha: float, params: EMParams):
    """zeta(s, a) minus N**(1-s)/(s-1), with its error bound; s = 1 allowed."""
    value, mag = _regular_part(s, alpha, params)
    return value, params.tail_bound + _slack(s, params.N, mag)


def _hurwitz_native(s: complex, alpha: float, params: EMParams):
    value, mag = _regular_part(s, alpha, params)
    pole = _pole_term(s, params.N)
    mag += abs(pole)
    return value + pole, params.tail_bound + _slack(s, params.N, mag)


def hurwitz_zeta(s, alpha, target_abs_error: float = 1e-10, *, params: EMParams | None = None,
                 return_error: bool = False):
    """Hurwitz zeta(s, alpha) for complex s != 1 and real alpha > 0.

    alpha > 1 is reduced into (0, 1] first.  With ``return_error=True`` the
    result is ``(value, error_bound)``.
    """
    s = _as_complex(s)
    a = _check_alpha(alpha)
    _check_target(target_abs_error)
    if s == 1:
        raise ZetaDomainError("s = 1 is the pole of zeta(s, a)")
    if params is None:
        params = _plan(s, target_abs_error)
    elif s.real + params.r <= 0:
        raise ZetaDomainError("supplied params do not satisfy Re(s) + r > 0")
    a0, K = _reduce_alpha(a)
    value, err = _hurwitz_native(s, a0, params)
    if K:
        shift = [(a - j) ** -s for j in range(1, K + 1)]
        value -= complex(math.fsum(t.real for t in shift), math.fsum(t.imag for t in shift))
        err += _slack(s, K + 1, math.fsum(abs(t) for t in shift))
    return (value, err) if return_error else value


def riemann_zeta(s, target_abs_error: float = 1e-10, *, return_error: bool = False):
    """zeta(s) = zeta(s, 1)."""
    return hurwitz_zeta(s, 1.0, target_abs_error, return_error=return_error)


# -- tail integrals ---------------------------------------------------------

_GL_LOW = np.polynomial.legendre.leggauss(24)
_GL_HIGH = np.polynomial.legendre.leggauss(32)


def _ibp_plan(ell: int, N: int, z: complex, log_weight: bool, target: float):
    """Walk the integration-by-parts chain at split N.

    Returns (J, leftover_bound, coefficient list) where J boundary terms bring
    the leftover integral under ``target``, or None if the bound stalls first.
    """
    a, b = (1 + 0j, 0j) if log_weight else (0j, 1 + 0j)
    coeffs = []
    log_n = math.log(N)
    best = math.inf
    j = 0
    while True:
        c = z.real + j - 1
        if c > 0:
            m_sup = _sup_psi(ell + j)
            scale = N ** -c
            bound = m_sup * scale * (abs(a) * (log_n / c + 1 / c**2) + abs(b) / c)
            if bound <= target:
                return j, bound, coeffs
            if bound > best and j > 4:
                return None
            best = min(best, bound)
        if ell + j + 1 > MAX_FLOAT_ORDER:
            return None
        coeffs.append((a, b))
        zj = z + j
        a, b = -zj * a, -zj * b + a
        j += 1


def _weight(u, z: complex, log_weight: bool):
    w = np.exp(-z * np.log(u))
    return w * np.log(u) if log_weight else w


def _quadrature(ell: int, alpha: float, lo: int, hi: int, z: complex, log_weight: bool):
    """Gauss-Legendre on the smooth pieces of psi_ell(u - a) over [lo, hi]."""
    frac_a = alpha - math.floor(alpha)
    cuts = [float(lo)]
    k = lo
    while k + frac_a < hi:
        if k + frac_a > lo:
            cuts.append(k + frac_a)
        k += 1
    cuts.append(float(hi))
    coeffs = np.array(scaled_bernoulli_coeffs(ell)[::-1])
    results = []
    mag = 0.0
    for nodes, weights in (_GL_LOW, _GL_HIGH):
        total = 0j
        mag = 0.0
        for left, right in zip(cuts[:-1], cuts[1:]):
            half = 0.5 * (right - left)
            mid = 0.5 * (right + left)
            u = mid + half * nodes
            shift = math.floor(mid - alpha)
            v = u - alpha - shift
            f = np.polyval(coeffs, v) * _weight(u, z, log_weight) * (half * weights)
            total += complex(f.sum())
            mag += float(np.abs(f).sum())
        results.append(total)
    err = abs(results[1] - results[0]) + _SLACK * EPS * mag
    return results[1], err


def _ibp_sum(ell, alpha, N, z, log_weight, coeffs):
    log_n = math.log(N)
    base = cmath.exp(-z * log_n)
    total = 0j
    mag = 0.0
    for j, (a, b) in enumerate(coeffs):
        w = base * N ** -j * (a * log_n + b)
        term = (-1) ** (j + 1) * _psi_at_minus_alpha(ell + 1 + j, alpha) * w
        total += term
        mag += abs(term)
    return total, mag


def weighted_tail_integral(ell: int, alpha: float, N: int, z, *, log_weight: bool = False,
                           target_abs_error: float = 1e-12):
    """int_N^oo psi_ell(u - a) u**(-z) (log u)**k du with k = 0 or 1.

    Repeated integration by parts uses psi_{l+1}' = psi_l; the boundary terms
    are psi_{l+1+j}(N - a) times the j-th derivative of the weight at N.  If
    the factorially growing chain stalls before reaching the target, the
    range [N, N'] is integrated by Gauss-Legendre and the chain restarts at N'.
    Returns ``(value, error_bound)``.
    """
    z = complex(z)
    if z.real <= 0:
        raise ZetaDomainError("the weight u**(-z) needs Re(z) > 0")
    a = float(alpha)
    if not 0 < a <= 1:
        raise ZetaDomainError("alpha must lie in (0, 1]")
    if N < 1:
        raise ZetaDomainError("N must be >= 1")
    split = N
    while True:
        plan = _ibp_plan(ell, split, z, log_weight, target_abs_error / 2)
        if plan is not None:
            break
        split = split + 1 if split < 16 else int(split * 1.25)
        if split > MAX_SPLIT:
            raise PrecisionInfeasible("tail integral target unreachable for N <= 10**6")
    J, leftover, coeffs = plan
    value, mag = _ibp_sum(ell, a, split, z, log_weight, coeffs)
    err = leftover + _SLACK * EPS * mag
    if split > N:
        head, head_err = _quadrature(ell, a, N, split, z, log_weight)
        value += head
        err += head_err
    return value, err


def tail_integral(m: int, alpha: float, N: int, target_abs_error: float = 1e-12, *,
                  return_error: bool = False):
    """int_N^oo psi_{m+1}(u - a) / u du for 0 < a <= 1."""
    if m < 0:
        raise ZetaDomainError("m must be >= 0")
    value, err = weighted_tail_integral(m + 1, alpha, N, 1.0, target_abs_error=target_abs_error)
    return (value.real, err) if return_error else value.real


# -- derivatives ------------------------------------------------------------

def _deriv_native(s: complex, alpha: float, params: EMParams, target: float):
    N, r = params.N, params.r
    log_n = math.log(N)
    terms = []
    for n in range(N):
        x = n + alpha
        if x != 1.0:
            terms.append(-(x ** -s) * math.log(x))
    pole = _pole_term(s, N)
    terms.append(-pole * (1 / (s - 1) + log_n))
    p, dp = _rising_with_derivative(s, r + 1)
    n_pow = cmath.exp(-s * log_n)
    for ell in range(r + 1):
        scale = _em_coefficient(ell, alpha) * n_pow * N ** -ell
        terms.append(scale * (dp[ell] - p[ell] * log_n))
    value = complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))
    err = _slack(s, N, math.fsum(abs(t) for t in terms))
    # -P'_{r+1} I_0 + P_{r+1} I_1 with weights u**(-s-r-1) and u**(-s-r-1) log u.
    z = s + r + 1
    for factor, log_weight in ((-dp[r + 1], False), (p[r + 1], True)):
        if factor == 0:
            continue
        part_target = max(target / (4 * abs(factor)), 1e-300)
        integral, ierr = weighted_tail_integral(
            r + 1, alpha, N, z, log_weight=log_weight, target_abs_error=part_target
        )
        value += factor * integral
        err += abs(factor) * ierr + _SLACK * EPS * abs(factor * integral)
    return value, err


def hurwitz_zeta_deriv(s, alpha, target_abs_error: float = 1e-10, *, params: EMParams | None = None,
                       return_error: bool = False):
    """d/ds zeta(s, alpha) by term-by-term differentiation of the expansion."""
    s = _as_complex(s)
    a = _check_alpha(alpha)
    _check_target(target_abs_error)
    if s == 1:
        raise ZetaDomainError("s = 1 is the pole of zeta(s, a)")
    if params is None:
        params = _plan(s, target_abs_error)
    a0, K = _reduce_alpha(a)
    value, err = _deriv_native(s, a0, params, target_abs_error)
    if K:
        shift = [(a - j) ** -s * math.log(a - j) for j in range(1, K + 1) if a - j != 1.0]
        value += complex(math.fsum(t.real for t in shift), math.fsum(t.imag for t in shift))
        err += _slack(s, K + 1, math.fsum(abs(t) for t in shift))
    return (value, err) if return_error else value


def _ibp_min_bound(ell: int, N: int) -> float:
    # Smallest leftover (j-1)! M_{l+j} N**-j along the chain for weight 1/u.
    best = math.inf
    for j in range(1, MAX_FLOAT_ORDER - ell):
        bound = math.exp(math.lgamma(j) + math.log(_sup_psi(ell + j)) - j * math.log(N))
        if bound > best:
            break
        best = bound
    return best


def _split_for_deriv_neg(m: int, target: float) -> int:
    # Smallest split whose tail chain reaches the target; keeps the
    # cancelling polynomial-size sums as small as possible.
    cap = max(10, m + 2)
    need = target / (4 * factorial(m))
    for N in range(1, cap + 1):
        if _ibp_min_bound(m + 1, N) <= need:
            return N
    return cap


def zeta_deriv_neg(m: int, alpha=1.0, target_abs_error: float = 1e-10, *, N: int | None = None,
                   return_error: bool = False):
    """zeta'(-m, alpha) for integer m >= 0 and 0 < alpha <= 1.

    Closed finite part plus (-1)**(m+1) m! times the tail integral
    int_N^oo psi_{m+1}(u - a)/u du.
    """
    if not isinstance(m, int) or m < 0:
        raise ZetaDomainError("m must be an integer >= 0")
    a = _check_alpha(alpha)
    if a > 1:
        raise ZetaDomainError("alpha must lie in (0, 1]; shift larger alpha first")
    _check_target(target_abs_error)
    if N is None:
        N = _split_for_deriv_neg(m, target_abs_error)
    fa = Fraction(a)
    log_n = math.log(N)

    log_terms = [-((n + a) ** m) * math.log(n + a) for n in range(N) if n + a != 1.0]
    # Coefficients of log N and of 1, exact in rationals.
    log_coeff = Fraction(N ** (m + 1), m + 1)
    const = -Fraction(N ** (m + 1), (m + 1) ** 2)
    for ell in range(m + 1):
        weight = comb(m, ell) * hurwitz_neg_poly(ell)(fa) * N ** (m - ell)
        harmonic = sum((Fraction(1, j) for j in range(m - ell + 1, m + 1)), Fraction(0))
        log_coeff -= weight
        const -= weight * harmonic
    finite = log_terms + [float(log_coeff) * log_n, float(const)]
    value = math.fsum(finite)
    magnitude = math.fsum(abs(t) for t in finite)

    integral_target = target_abs_error / (2 * factorial(m))
    integral, ierr = tail_integral(m, a, N, integral_target, return_error=True)
    sign = -1 if m % 2 == 0 else 1
    value += sign * factorial(m) * integral
    err = _SLACK * EPS * magnitude + factorial(m) * ierr
    return (value, err) if return_error else value
