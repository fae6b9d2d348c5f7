"""Dirichlet characters with exact root-of-unity values, Gauss sums, L-series.

A character value e^{2 pi i k/n} is stored as the reduced angle k/n in
[0, 1) (a :class:`~fractions.Fraction`); a non-unit residue stores ``None``.
Characters mod q are indexed by exponent vectors over a fixed generator list
of (Z/qZ)^*: generators are taken prime by prime in ascending order, with
(-1, 5) at powers of two >= 8 and a primitive root at odd prime powers.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .em_engine import MIN_TARGET, _hurwitz_pole_free, _plan, _pole_term, _slack
from .errors import PrecisionInfeasible, ZetaDomainError

__all__ = [
    "CharacterGroup",
    "DirichletCharacter",
    "character_group",
    "conjugate",
    "cyclotomic_polynomial",
    "enumerate_characters",
    "gauss_sum",
    "get_character",
    "l_series",
    "root_of_unity_sum",
]

MAX_MODULUS = 10**4


def factorize(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def _primitive_root_prime_power(p: int, k: int) -> int:
    phi_p = p - 1
    factors = [f for f, _ in factorize(phi_p)]
    g = 2
    while not all(pow(g, phi_p // f, p) != 1 for f in factors):
        g += 1
    if k >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


@dataclass(frozen=True)
class CharacterGroup:
    """Generators of (Z/qZ)^* and their orders, plus a dense discrete-log table."""

    modulus: int
    generators: tuple[int, ...]
    orders: tuple[int, ...]
    dlog: dict

    @property
    def order(self) -> int:
        return math.prod(self.orders)


@lru_cache(maxsize=256)
def character_group(q: int) -> CharacterGroup:
    if not isinstance(q, int) or q < 1:
        raise ZetaDomainError(f"modulus must be an integer >= 1, got {q!r}")
    if q > MAX_MODULUS:
        raise ZetaDomainError(f"modulus {q} exceeds the dense-table limit {MAX_MODULUS}")
    gens: list[int] = []
    orders: list[int] = []

    def lift(g: int, component: int) -> int:
        # x = g mod component, x = 1 mod q/component
        rest = q // component
        if rest == 1:
            return g % q
        t = ((g - 1) * pow(rest, -1, component)) % component
        return (1 + rest * t) % q

    for p, k in factorize(q):
        pk = p**k
        if p == 2:
            if k >= 2:
                gens.append(lift(pk - 1, pk))
                orders.append(2)
            if k >= 3:
                gens.append(lift(5, pk))
                orders.append(2 ** (k - 2))
        else:
            gens.append(lift(_primitive_root_prime_power(p, k), pk))
            orders.append(pk // p * (p - 1))
    dlog = {}
    for exps in itertools.product(*(range(o) for o in orders)):
        x = 1
        for g, e in zip(gens, exps):
            x = x * pow(g, e, q) % q
        dlog[x % q] = exps
    if q == 1:
        dlog = {0: ()}
    return CharacterGroup(q, tuple(gens), tuple(orders), dlog)


@dataclass(frozen=True)
class DirichletCharacter:
    """A Dirichlet character mod q.

    ``angles[a - 1]`` for a in 1..q holds the reduced angle of chi(a), or
    ``None`` when gcd(a, q) > 1.
    """

    modulus: int
    index: tuple[int, ...]
    angles: tuple[Optional[Fraction], ...]
    conductor: int
    parity: str

    def angle(self, a: int) -> Optional[Fraction]:
        return self.angles[(a - 1) % self.modulus]

    def value(self, a: int) -> Optional[tuple[int, int]]:
        """chi(a) as (k, n) meaning e^{2 pi i k/n}; None for chi(a) = 0."""
        ang = self.angle(a)
        return None if ang is None else (ang.numerator, ang.denominator)

    def __call__(self, a: int) -> complex:
        ang = self.angle(a)
        if ang is None:
            return 0j
        return _root_of_unity(ang)

    @property
    def is_principal(self) -> bool:
        return all(a is None or a == 0 for a in self.angles)

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    @property
    def is_real(self) -> bool:
        return all(a is None or a.denominator <= 2 for a in self.angles)

    @property
    def is_even(self) -> bool:
        return self.parity == "even"

    def to_json(self) -> dict:
        return {
            "q": self.modulus,
            "index": list(self.index),
            "conductor": self.conductor,
            "parity": self.parity,
            "values": [None if a is None else [a.numerator, a.denominator] for a in self.angles],
        }


def _root_of_unity(angle: Fraction) -> complex:
    # Exact at the quarter turns so that real characters give real values.
    quarter = {Fraction(0): 1 + 0j, Fraction(1, 4): 1j, Fraction(1, 2): -1 + 0j, Fraction(3, 4): -1j}
    if angle in quarter:
        return quarter[angle]
    return cmath.exp(2j * math.pi * float(angle))


def _build(group: CharacterGroup, index: Sequence[int]) -> DirichletCharacter:
    q = group.modulus
    angles: list[Optional[Fraction]] = []
    for a in range(1, q + 1):
        exps = group.dlog.get(a % q)
        if exps is None:
            angles.append(None)
            continue
        ang = sum((Fraction(c * e, o) for c, e, o in zip(index, exps, group.orders)), Fraction(0))
        angles.append(ang - math.floor(ang))
    angles_t = tuple(angles)

    def trivial_on_kernel(d: int) -> bool:
        return all(
            angles_t[a - 1] == 0
            for a in range(1, q + 1)
            if angles_t[a - 1] is not None and (a - 1) % d == 0
        )

    conductor = next(d for d in range(1, q + 1) if q % d == 0 and trivial_on_kernel(d))
    minus_one = angles_t[(q - 1) % q - 1] if q > 1 else Fraction(0)
    parity = "even" if minus_one == 0 else "odd"
    return DirichletCharacter(q, tuple(index), angles_t, conductor, parity)


def enumerate_characters(q: int) -> list[DirichletCharacter]:
    """All phi(q) characters mod q, lexicographic in their index vectors."""
    group = character_group(q)
    return [_build(group, idx) for idx in itertools.product(*(range(o) for o in group.orders))]


def get_character(q: int, index: Iterable[int]) -> DirichletCharacter:
    group = character_group(q)
    index = tuple(int(i) for i in index)
    if len(index) != len(group.orders):
        raise ZetaDomainError(
            f"modulus {q} needs an index vector of length {len(group.orders)} "
            f"(generator orders {list(group.orders)}), got {list(index)}"
        )
    if any(not 0 <= c < o for c, o in zip(index, group.orders)):
        raise ZetaDomainError(f"index {list(index)} out of range for orders {list(group.orders)}")
    return _build(group, index)


def conjugate(chi: DirichletCharacter) -> DirichletCharacter:
    group = character_group(chi.modulus)
    index = tuple((-c) % o for c, o in zip(chi.index, group.orders))
    angles = tuple(None if a is None else (-a) - math.floor(-a) for a in chi.angles)
    return DirichletCharacter(chi.modulus, index, angles, chi.conductor, chi.parity)


# -- exact sums of roots of unity --------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, ascending."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_divide(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _exact_divide(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    return out


def _reduce_mod(poly: list[int], modulus: Sequence[int]) -> list[int]:
    # modulus is monic
    poly = list(poly)
    deg = len(modulus) - 1
    for i in range(len(poly) - 1, deg - 1, -1):
        c = poly[i]
        if c:
            for j, mcoef in enumerate(modulus):
                poly[i - deg + j] -= c * mcoef
    poly = poly[:deg] if deg else []
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def root_of_unity_sum(angles: Iterable[Fraction]) -> tuple[int, tuple[int, ...]]:
    """Exact sum of e^{2 pi i a} over the given rational angles.

    Returns (n, c) with the sum equal to sum_j c[j] zeta_n**j in the reduced
    basis modulo Phi_n; the sum is zero iff ``c`` is empty.
    """
    angles = list(angles)
    n = math.lcm(*(a.denominator for a in angles)) if angles else 1
    counts = [0] * n
    for a in angles:
        counts[int(a * n) % n] += 1
    return n, tuple(_reduce_mod(counts, cyclotomic_polynomial(n)))


def gauss_sum(chi: DirichletCharacter) -> complex:
    """tau(chi) = sum_{a=1}^{q} chi(a) e^{2 pi i a/q}, angles added exactly."""
    q = chi.modulus
    angles = []
    for a in range(1, q + 1):
        ang = chi.angle(a)
        if ang is not None:
            total = ang + Fraction(a, q)
            angles.append(total - math.floor(total))
    values = [_root_of_unity(a) for a in angles]
    return complex(math.fsum(v.real for v in values), math.fsum(v.imag for v in values))


# -- L-series ---------------------------------------------------------------

def l_series(s, chi: DirichletCharacter, target_abs_error: float = 1e-10, *,
             return_error: bool = False):
    """L(s, chi) = q**-s sum_a chi(a) zeta(s, a/q).

    The N**(1-s)/(s-1) term of the expansion does not depend on a, so it is
    weighted by sum_a chi(a); for non-principal chi that sum vanishes exactly
    and s = 1 is admissible.
    """
    s = complex(s)
    if not target_abs_error >= MIN_TARGET:
        raise PrecisionInfeasible(f"target below {MIN_TARGET:g}")
    q = chi.modulus
    principal = chi.is_principal
    if s == 1 and principal:
        raise ZetaDomainError("L(s, chi) has a pole at s = 1 for principal chi")
    scale = cmath.exp(-s * math.log(q))
    units = [a for a in range(1, q + 1) if chi.angle(a) is not None]
    per_term = target_abs_error / (len(units) * abs(scale))
    params = _plan(s, per_term)
    total = 0j
    err = 0.0
    for a in units:
        value, e = _hurwitz_pole_free(s, a / q, params)
        total += chi(a) * value
        err += e
    if principal:
        pole = len(units) * _pole_term(s, params.N)
        total += pole
        err += _slack(s, params.N, abs(pole))
    result = scale * total
    err = abs(scale) * err + 4 * 2.0**-52 * abs(result)
    return (result, err) if return_error else result
