"""
Alexander polynomial, Jones polynomial and determinant of a 3-braid closure.

Everything is read off the reduced Burau matrix of the braid word:

* Alexander: ``det(I - psi_t(b)) = 1 - tr + det`` divided exactly by
  ``1 + t + t^2``, then reduced to canonical unit form.
* Jones: ``(-x)^e (x^2 + x^-2 + tr psi_{x^2}(b))`` with ``x^2 = t``.

These serve as brute-force oracles for the closed forms in
:mod:`weavelink.weaving`.  The Jones convention fixes one chirality; the
mirror image ``V(t^-1)`` is what some knot tables list instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .braid import BraidWord3, burau_of_word
from .errors import InternalMismatch
from .laurent import (
    ONE,
    ZERO,
    GaussianInt,
    LaurentPoly,
    canonical_unit_normalize,
    eval_gauss,
    eval_int,
    exact_div,
    substitute_negate,
)

__all__ = ["InvariantValue", "alexander", "jones", "determinant"]

Variable = Literal["t", "s", "x"]

_ONE_PLUS_T_PLUS_T2 = LaurentPoly(0, (1, 1, 1))


@dataclass(frozen=True)
class InvariantValue:
    poly: LaurentPoly
    variable: Variable
    normalized: bool = False

    def in_t(self) -> LaurentPoly:
        """The same polynomial written in t (x-values need even exponents)."""
        if self.variable == "t":
            return self.poly
        if self.variable == "s":
            return substitute_negate(self.poly)
        return self.poly.deflate(2)

    def in_s(self) -> LaurentPoly:
        return substitute_negate(self.in_t())

    def has_integer_t_powers(self) -> bool:
        if self.variable != "x":
            return True
        return all(k % 2 == 0 for k in self.poly.terms())


def alexander(w: BraidWord3) -> InvariantValue:
    """
    Canonical-unit Alexander polynomial (variable t) of the closure of ``w``.

    The unit prefactor ``(-1/sqrt t)^(e-2)`` is dropped: the result is only
    defined up to ``±t^k`` anyway.  Split closures give the zero polynomial.
    """
    M = burau_of_word(w)
    char_at_one = ONE - M.trace() + M.det()
    poly = exact_div(char_at_one, _ONE_PLUS_T_PLUS_T2)
    if poly.is_zero():
        return InvariantValue(ZERO, "t", normalized=True)
    return InvariantValue(canonical_unit_normalize(poly), "t", normalized=True)


def jones(w: BraidWord3) -> InvariantValue:
    """Jones polynomial in ``x = sqrt(t)``, exact and un-normalized."""
    tr_x = burau_of_word(w).trace().inflate(2)
    e = w.exponent_sum
    prefactor = LaurentPoly.monomial(e, -1 if e % 2 else 1)
    bracket = LaurentPoly.monomial(2) + LaurentPoly.monomial(-2) + tr_x
    return InvariantValue(prefactor * bracket, "x", normalized=False)


def determinant(w: BraidWord3) -> int:
    """
    |V(-1)|, computed at x = i over the Gaussian integers and checked against
    |Delta(-1)| from the Alexander route.
    """
    value = eval_gauss(jones(w).poly, GaussianInt(0, 1))
    if value.re != 0 and value.im != 0:
        raise InternalMismatch(f"V(-1) = {value} is not a unit multiple of an integer")
    via_jones = abs(value.re) + abs(value.im)
    via_alexander = abs(eval_int(alexander(w).poly, -1))
    if via_jones != via_alexander:
        raise InternalMismatch(
            f"determinant routes disagree for {w}: Jones gives {via_jones}, "
            f"Alexander gives {via_alexander}"
        )
    return via_jones
