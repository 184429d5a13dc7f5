"""
Exact integer Laurent polynomials in one variable.

A value stores the lowest exponent (``offset``) and a dense tuple of
coefficients starting at that exponent.  Which variable a polynomial is
written in (t, s = -t, or x with x^2 = t) is decided by whoever produced it;
nothing here tracks it.

>>> p = LaurentPoly(-1, (1, 3, 1))
>>> p
LaurentPoly('v^-1 + 3 + v')
>>> p * p
LaurentPoly('v^-2 + 6v^-1 + 11 + 6v + v^2')
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import NonExactDivision, NonUnitPoint, ZeroDenominator, ZeroPolynomial

__all__ = [
    "LaurentPoly",
    "GaussianInt",
    "ZERO",
    "ONE",
    "add",
    "mul",
    "exact_div",
    "eval_int",
    "eval_gauss",
    "eval_complex",
    "substitute_negate",
    "canonical_unit_normalize",
    "is_palindromic",
]


@dataclass(frozen=True, init=False)
class LaurentPoly:
    offset: int
    coeffs: tuple[int, ...]

    def __init__(self, offset: int = 0, coeffs: Sequence[int] = ()):
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "offset", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "offset", int(offset) + lo)
            object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs[lo:hi]))

    # -- constructors -----------------------------------------------------

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls(exponent, (coeff,))

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls(0, (c,))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> LaurentPoly:
        """Build from an ``{exponent: coefficient}`` mapping."""
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, [terms.get(k, 0) for k in range(lo, hi + 1)])

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    @property
    def degree(self) -> int:
        """Highest exponent with a nonzero coefficient (``offset - 1`` for zero)."""
        return self.offset + len(self.coeffs) - 1

    def terms(self) -> dict[int, int]:
        return {self.offset + i: c for i, c in enumerate(self.coeffs) if c}

    def coeff(self, exponent: int) -> int:
        i = exponent - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.offset, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise NonExactDivision(f"{self!r} is not a unit; cannot raise to {n}")
            c = self.coeffs[0] ** (-n)
            return LaurentPoly(self.offset * n, (c,))
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``v**k``."""
        if self.is_zero():
            return self
        return LaurentPoly(self.offset + k, self.coeffs)

    def inflate(self, factor: int) -> LaurentPoly:
        """Substitute ``v -> v**factor`` (factor > 0)."""
        return LaurentPoly.from_terms({k * factor: c for k, c in self.terms().items()})

    def deflate(self, factor: int) -> LaurentPoly:
        """Inverse of :meth:`inflate`; every exponent must be a multiple of ``factor``."""
        terms = self.terms()
        if any(k % factor for k in terms):
            raise ValueError(f"exponents of {self!r} are not all divisible by {factor}")
        return LaurentPoly.from_terms({k // factor: c for k, c in terms.items()})

    def __call__(self, value):
        return eval_complex(self, value)

    # -- display ----------------------------------------------------------

    def format(self, var: str = "v") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in sorted(self.terms().items()):
            if k == 0:
                mono = ""
            elif k == 1:
                mono = var
            else:
                mono = f"{var}^{k}"
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly(0, (1,))


def _coerce(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    return NotImplemented


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    lo = min(p.offset, q.offset)
    hi = max(p.degree, q.degree)
    out = [0] * (hi - lo + 1)
    for i, c in enumerate(p.coeffs, p.offset - lo):
        out[i] += c
    for i, c in enumerate(q.coeffs, q.offset - lo):
        out[i] += c
    return LaurentPoly(lo, out)


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if p.is_zero() or q.is_zero():
        return ZERO
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, cb in enumerate(b):
        if cb == 0:
            continue
        for i, ca in enumerate(a):
            out[i + j] += ca * cb
    return LaurentPoly(p.offset + q.offset, out)


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """
    Return ``q`` with ``p == q * d``.

    Long division runs upward from the lowest exponent and stops at the first
    remainder coefficient that is not cancelled exactly.

    >>> exact_div(LaurentPoly(0, (1, 2, 1)), LaurentPoly(0, (1, 1)))
    LaurentPoly('1 + v')
    """
    if d.is_zero():
        raise ZeroDenominator("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    n_q = len(p.coeffs) - len(d.coeffs) + 1
    if n_q <= 0:
        raise NonExactDivision(f"{d!r} does not divide {p!r}")
    rem = list(p.coeffs)
    dc = d.coeffs
    lead = dc[0]
    quot = [0] * n_q
    for i in range(n_q):
        c = rem[i]
        if c == 0:
            continue
        qi, r = divmod(c, lead)
        if r:
            raise NonExactDivision(f"{d!r} does not divide {p!r} (remainder at step {i})")
        quot[i] = qi
        for j, dj in enumerate(dc):
            rem[i + j] -= qi * dj
    if any(rem[n_q:]):
        raise NonExactDivision(f"{d!r} does not divide {p!r}")
    return LaurentPoly(p.offset - d.offset, quot)


def eval_int(p: LaurentPoly, v: int) -> Union[int, Fraction]:
    """Exact value at an integer point; a Fraction when negative powers of ``v`` remain."""
    if p.is_zero():
        return 0
    if p.offset < 0 and v == 0:
        raise ZeroDenominator("negative exponent evaluated at 0")
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * v + c
    if p.offset >= 0:
        return acc * v**p.offset
    return Fraction(acc, v ** (-p.offset))


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int = 0

    def __add__(self, other: GaussianInt) -> GaussianInt:
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussianInt) -> GaussianInt:
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        """|z|^2, an exact nonnegative integer."""
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __complex__(self) -> complex:
        return complex(self.re, self.im)


I = GaussianInt(0, 1)


def eval_gauss(p: LaurentPoly, v: GaussianInt) -> GaussianInt:
    """Exact value at one of the units 1, -1, i, -i."""
    if not v.is_unit():
        raise NonUnitPoint(f"{v} is not a unit of Z[i]")
    powers = [GaussianInt(1, 0)]
    for _ in range(3):
        powers.append(powers[-1] * v)
    total = GaussianInt(0, 0)
    for k, c in p.terms().items():
        total = total + powers[k % 4] * c
    return total


def eval_complex(p: LaurentPoly, z):
    """
    Horner evaluation at ``z``.

    Works for Python complex/float as well as mpmath numbers; the result type
    follows ``z``.  No tolerance is applied.
    """
    if p.is_zero():
        return 0 * z
    if p.offset < 0 and z == 0:
        raise ZeroDenominator("negative exponent evaluated at 0")
    acc = 0 * z
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc * z**p.offset


def substitute_negate(p: LaurentPoly) -> LaurentPoly:
    """Replace the variable ``v`` by ``-v`` (bridges t and s = -t)."""
    return LaurentPoly(
        p.offset,
        [-c if (p.offset + i) % 2 else c for i, c in enumerate(p.coeffs)],
    )


def canonical_unit_normalize(p: LaurentPoly) -> LaurentPoly:
    """
    The unique ``±v^k * p`` with lowest exponent 0 and positive constant term.

    >>> canonical_unit_normalize(LaurentPoly(-1, (-1, -3, -1)))
    LaurentPoly('1 + 3v + v^2')
    """
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no canonical unit form")
    sign = -1 if p.coeffs[0] < 0 else 1
    return LaurentPoly(0, [sign * c for c in p.coeffs])


def is_palindromic(p: LaurentPoly) -> bool:
    return p.coeffs == p.coeffs[::-1]


def from_coeffs(coeffs: Iterable[int], offset: int = 0) -> LaurentPoly:
    return LaurentPoly(offset, list(coeffs))
