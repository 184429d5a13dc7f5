from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weavelink.errors import NonExactDivision, ZeroDenominator, ZeroPolynomial
from weavelink.laurent import (
    ONE,
    ZERO,
    GaussianInt,
    LaurentPoly,
    canonical_unit_normalize,
    eval_gauss,
    eval_int,
    exact_div,
    is_palindromic,
    substitute_negate,
)

small = st.integers(-20, 20)
polys = st.builds(LaurentPoly, st.integers(-6, 6), st.lists(small, max_size=7))
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_trims_zeros():
    p = LaurentPoly(-2, (0, 0, 3, 0, 1, 0))
    assert p.offset == 0 and p.coeffs == (3, 0, 1)
    assert LaurentPoly(5, (0, 0)).is_zero()


def test_basic_arithmetic():
    t = LaurentPoly.monomial(1)
    assert (1 + t) * (1 - t) == 1 - t * t
    assert (t ** -2) * t ** 2 == ONE
    assert LaurentPoly.from_terms({-1: 1, 1: 1}).format("s") == "s^-1 + s"


def test_negative_power_needs_unit():
    with pytest.raises(NonExactDivision):
        LaurentPoly(0, (1, 1)) ** -1


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(polys, nonzero_polys)
def test_exact_div_of_product(a, b):
    assert exact_div(a * b, b) == a


def test_exact_div_rejects_remainder():
    with pytest.raises(NonExactDivision):
        exact_div(LaurentPoly(0, (1, 0, 1)), LaurentPoly(0, (1, 1)))


def test_exact_div_example():
    assert exact_div(LaurentPoly(0, (1, 0, 0, -1)), LaurentPoly(0, (1, -1))) == LaurentPoly(0, (1, 1, 1))


@given(polys)
def test_substitute_negate_is_involution(p):
    assert substitute_negate(substitute_negate(p)) == p


@given(nonzero_polys)
def test_normalize_idempotent_and_unit_invariant(p):
    q = canonical_unit_normalize(p)
    assert canonical_unit_normalize(q) == q
    assert q.offset == 0 and q.coeffs[0] > 0
    assert canonical_unit_normalize(-p.shift(3)) == q


def test_normalize_zero_raises():
    with pytest.raises(ZeroPolynomial):
        canonical_unit_normalize(ZERO)


def test_eval_int():
    p = LaurentPoly(-1, (1, 2, 1))
    assert eval_int(p, 1) == 4
    assert eval_int(p, 2) == Fraction(9, 2)
    with pytest.raises(ZeroDenominator):
        eval_int(p, 0)


def test_eval_gauss():
    i = GaussianInt(0, 1)
    assert eval_gauss(LaurentPoly(0, (1, 0, 1)), i) == GaussianInt(0, 0)
    assert eval_gauss(LaurentPoly(-1, (1, 0, 0)), i) == GaussianInt(0, -1)


def test_palindromic():
    assert is_palindromic(LaurentPoly(-1, (1, 3, 1)))
    assert not is_palindromic(LaurentPoly(0, (1, 2)))
