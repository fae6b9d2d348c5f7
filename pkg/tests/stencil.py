"""Fixed Euler-Maclaurin parameters for finite-difference references.

With (N, r) held fixed the truncated expansion is analytic in s, and its
remainder R obeys |R'(s0)| <= max_{|s-s0|=rho} |R| / rho (Cauchy).  Bounding
R on a circle, not just at s0 +- h, matters near s = 0, -1, -2, ... where
P_{r+1}(s) vanishes and the pointwise bound is O(h) while R' is not small.
"""

import cmath
import math

from zetacert.em_engine import EMParams, remainder_bound

RHO = 0.25
POINTS = 32


def _circle(s0, rho):
    return [s0 + rho * cmath.exp(2j * math.pi * k / POINTS) for k in range(POINTS)]


def circle_bound(s0, N, r, rho=RHO):
    return max(remainder_bound(s, N, r) for s in _circle(complex(s0), rho))


def _least_n(s0, r, rho, target, cap=10**5):
    # remainder_bound(s, N, r) = remainder_bound(s, 1, r) * N**-(sigma + r)
    need = 1
    for s in _circle(s0, rho):
        b1 = remainder_bound(s, 1, r)
        if b1 > target:
            need = max(need, math.ceil(math.exp((math.log(b1) - math.log(target)) / (s.real + r))))
        if need > cap:
            return None
    while circle_bound(s0, need, r, rho) > target:
        need += 1
    return need


def stencil_params(s0, target, rho=RHO):
    """Smallest N(1+r) pair with remainder <= target on |s - s0| = rho.

    Also returns the implied bound on the derivative of the remainder.
    """
    s0 = complex(s0)
    r_min = max(1, math.floor(rho - s0.real) + 1)
    best = None
    for r in range(r_min, 61):
        N = _least_n(s0, r, rho, target)
        if N is not None and (best is None or N * (1 + r) < best.N * (1 + best.r)):
            best = EMParams(N, r, circle_bound(s0, N, r, rho))
    if best is None:
        raise ValueError("no stencil parameters")
    return best, best.tail_bound / rho
