"""Exact rational substrate: binomials, Bernoulli numbers and polynomials.

Rationals are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  :class:`RationalPolynomial` is a small immutable
polynomial type over them, indexed by ascending degree.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational",
    "RationalPolynomial",
    "binomial",
    "bernoulli_number",
    "bernoulli_polynomial",
    "to_rational",
]

Rational = Fraction

Scalar = Union[int, Fraction]

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def to_rational(x) -> Fraction:
    """Convert ints, Fractions, floats (exactly) or "p/q" strings to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, float, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Fraction")


def binomial(n: int, k: int) -> int:
    """C(n, k) for non-negative integers; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial requires non-negative arguments")
    return comb(n, k)


class RationalPolynomial:
    """Immutable polynomial with Fraction coefficients, ``coeffs[i]`` of x**i.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: Scalar = 1) -> "RationalPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == RationalPolynomial([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"RationalPolynomial([{', '.join(str(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "α") -> str:
        """Human-readable form, e.g. ``-1/12 + 1/2·α - 1/2·α²``."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                power = var if i == 1 else var + str(i).translate(_SUPERSCRIPT)
                body = power if mag == 1 else f"{mag}·{power}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def _coerce(self, other) -> "RationalPolynomial":
        if isinstance(other, RationalPolynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self), len(other))
        return RationalPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalPolynomial(c * other for c in self._coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._coeffs or not other._coeffs:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return RationalPolynomial(c / other for c in self._coeffs)
        return NotImplemented

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        if not self._coeffs:
            return Fraction(0) if isinstance(x, (int, Fraction)) else x * 0
        return acc

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(i * c for i, c in enumerate(self._coeffs) if i)

    def shift(self, c: Scalar) -> "RationalPolynomial":
        """The polynomial x -> self(x + c), by repeated synthetic expansion."""
        c = to_rational(c)
        out = RationalPolynomial()
        x_plus_c = RationalPolynomial([c, 1])
        for coeff in reversed(self._coeffs):
            out = out * x_plus_c + coeff
        return out

    def to_json(self, m: int | None = None) -> dict:
        record: dict = {"coeffs": [f"{c.numerator}/{c.denominator}" for c in self._coeffs]}
        if m is not None:
            record = {"m": m, **record}
        return record

    @classmethod
    def from_json(cls, record: dict) -> "RationalPolynomial":
        return cls(Fraction(s) for s in record["coeffs"])


class _BernoulliCache:
    # Append-only table; concurrent first-fill writes identical values.
    def __init__(self):
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def get(self, n: int) -> Fraction:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            values = list(self._values)
            for k in range(len(values), n + 1):
                # sum_{j=0}^{k} C(k+1, j) B_j = 0, solved for B_k
                acc = sum(comb(k + 1, j) * values[j] for j in range(k))
                values.append(-acc / (k + 1))
            if len(values) > len(self._values):
                self._values = values
            return values[n]


_bernoulli = _BernoulliCache()


def bernoulli_number(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n >= 3 and n % 2:
        return Fraction(0)
    return _bernoulli.get(n)


_poly_cache: dict[int, RationalPolynomial] = {}


def bernoulli_polynomial(ell: int) -> RationalPolynomial:
    """B_ell(x) = sum_k C(ell, k) B_k x**(ell-k)."""
    if ell < 0:
        raise ValueError("ell must be >= 0")
    poly = _poly_cache.get(ell)
    if poly is None:
        coeffs: Sequence[Fraction] = [
            comb(ell, ell - i) * bernoulli_number(ell - i) for i in range(ell + 1)
        ]
        poly = _poly_cache.setdefault(ell, RationalPolynomial(coeffs))
    return poly
