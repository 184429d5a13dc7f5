"""
Three-strand braid words and their reduced Burau matrices.

Two variable conventions are in use.  :func:`burau_of_word` works in ``t``
with ``sigma_1 -> [[-t, 1], [0, 1]]`` and ``sigma_2 -> [[1, 0], [t, -t]]``.
:func:`burau_generator_power` works in ``s = -t``, where the powers of a
generator have short closed forms.  :meth:`BurauMatrix.negate_variable`
moves a matrix between the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BraidSyntaxError, ZeroExponent
from .laurent import ONE, ZERO, LaurentPoly, substitute_negate

__all__ = [
    "BraidWord3",
    "BurauMatrix",
    "parse_word",
    "burau_generator_power",
    "burau_of_word",
    "matrix_power",
    "trace",
    "det",
    "q_bracket",
]


@dataclass(frozen=True)
class BraidWord3:
    """A word in sigma_1, sigma_2 as ``(generator, exponent)`` letters."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        letters = tuple((int(g), int(e)) for g, e in self.letters)
        for g, e in letters:
            if g not in (1, 2):
                raise BraidSyntaxError(f"generator index {g} is not 1 or 2")
            if e == 0:
                raise ZeroExponent("braid letters must have nonzero exponent")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ints(cls, seq: Iterable[int]) -> BraidWord3:
        """``[1, -2]`` means sigma_1 sigma_2^-1."""
        letters = []
        for g in seq:
            g = int(g)
            if abs(g) not in (1, 2):
                raise BraidSyntaxError(f"generator {g} outside B_3 (use ±1 or ±2)")
            letters.append((abs(g), 1 if g > 0 else -1))
        return cls(tuple(letters))

    @classmethod
    def weaving(cls, n: int, m: int = 1) -> BraidWord3:
        """(sigma_1^m sigma_2^-m)^n."""
        return cls(((1, m), (2, -m)) * n)

    @property
    def exponent_sum(self) -> int:
        return sum(e for _, e in self.letters)

    def inverse(self) -> BraidWord3:
        return BraidWord3(tuple((g, -e) for g, e in reversed(self.letters)))

    def rotate(self, k: int = 1) -> BraidWord3:
        """Cyclic rotation of the letters (a conjugate braid)."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord3(self.letters[k:] + self.letters[:k])

    def __mul__(self, other: BraidWord3) -> BraidWord3:
        return BraidWord3(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def to_ints(self) -> list[int]:
        out = []
        for g, e in self.letters:
            out.extend([g if e > 0 else -g] * abs(e))
        return out

    def __str__(self) -> str:
        return " ".join(str(g) for g in self.to_ints())


def parse_word(text: str) -> BraidWord3:
    """Parse the whitespace-separated signed-integer syntax, e.g. ``"1 -2 1 -2"``."""
    try:
        values = [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise BraidSyntaxError(f"cannot parse braid word {text!r}") from exc
    return BraidWord3.from_ints(values)


@dataclass(frozen=True)
class BurauMatrix:
    """Row-major 2x2 matrix ``[[a, b], [c, d]]`` of Laurent polynomials."""

    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly
    d: LaurentPoly

    @classmethod
    def identity(cls) -> BurauMatrix:
        return cls(ONE, ZERO, ZERO, ONE)

    def __matmul__(self, other: BurauMatrix) -> BurauMatrix:
        return BurauMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    __mul__ = __matmul__

    def trace(self) -> LaurentPoly:
        return self.a + self.d

    def det(self) -> LaurentPoly:
        return self.a * self.d - self.b * self.c

    def negate_variable(self) -> BurauMatrix:
        return BurauMatrix(*(substitute_negate(e) for e in self.entries()))

    def entries(self) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
        return (self.a, self.b, self.c, self.d)


def q_bracket(m: int) -> LaurentPoly:
    """[m] = 1 + s + ... + s^(m-1) for m >= 1."""
    return LaurentPoly(0, [1] * m)


def burau_generator_power(generator: int, m: int) -> BurauMatrix:
    """
    psi_s(sigma_generator^m) in the variable s = -t, in closed form.

    Negative powers are exact inverses; their entries carry negative powers
    of s rather than a cleared denominator.
    """
    if m == 0:
        raise ZeroExponent("generator power must be nonzero")
    if generator not in (1, 2):
        raise BraidSyntaxError(f"generator index {generator} is not 1 or 2")
    k = abs(m)
    bracket = q_bracket(k)
    if generator == 1:
        if m > 0:
            return BurauMatrix(LaurentPoly.monomial(k), bracket, ZERO, ONE)
        return BurauMatrix(
            LaurentPoly.monomial(-k), -bracket.shift(-k), ZERO, ONE
        )
    if m > 0:
        return BurauMatrix(ONE, ZERO, -bracket.shift(1), LaurentPoly.monomial(k))
    # s^-m [[s^m, 0], [s[m], 1]]
    return BurauMatrix(ONE, ZERO, bracket.shift(1 - k), LaurentPoly.monomial(-k))


_T = LaurentPoly.monomial(1)
_GEN_T = {
    1: BurauMatrix(-_T, ONE, ZERO, ONE),
    2: BurauMatrix(ONE, ZERO, _T, -_T),
}
# inverses: det(psi_t(sigma_i)) = -t
_GEN_T_INV = {
    1: BurauMatrix(-LaurentPoly.monomial(-1), LaurentPoly.monomial(-1), ZERO, ONE),
    2: BurauMatrix(ONE, ZERO, ONE, -LaurentPoly.monomial(-1)),
}


def burau_of_word(w: BraidWord3) -> BurauMatrix:
    """psi_t of the word, as the ordered product of generator images."""
    result = BurauMatrix.identity()
    for g, e in w.letters:
        base = _GEN_T[g] if e > 0 else _GEN_T_INV[g]
        result = result @ matrix_power(base, abs(e))
    return result


def matrix_power(M: BurauMatrix, n: int) -> BurauMatrix:
    if n < 0:
        raise ValueError("matrix_power needs n >= 0")
    result = BurauMatrix.identity()
    base = M
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def trace(M: BurauMatrix) -> LaurentPoly:
    return M.trace()


def det(M: BurauMatrix) -> LaurentPoly:
    return M.det()


def product(mats: Sequence[BurauMatrix]) -> BurauMatrix:
    result = BurauMatrix.identity()
    for M in mats:
        result = result @ M
    return result
