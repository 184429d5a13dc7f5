from hypothesis import given
from hypothesis import strategies as st

from weavelink.braid import BraidWord3, parse_word
from weavelink.invariants import alexander, determinant, jones
from weavelink.laurent import LaurentPoly, eval_int

words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=12).map(BraidWord3.from_ints)


def test_figure_eight():
    w = parse_word("1 -2 1 -2")
    assert alexander(w).poly == LaurentPoly(0, (1, -3, 1))
    assert jones(w).in_t() == LaurentPoly(-2, (1, -1, 1, -1, 1))
    assert determinant(w) == 5


def test_trefoil():
    w = parse_word("1 2 1 2")
    assert jones(w).in_t() == LaurentPoly(1, (1, 0, 1, -1))
    assert alexander(w).poly == LaurentPoly(0, (1, -1, 1))
    assert determinant(w) == 3


def test_split_closure():
    w = BraidWord3()
    assert alexander(w).poly.is_zero()
    assert jones(w).in_t() == LaurentPoly(-1, (1, 2, 1))
    assert determinant(w) == 0


def test_unknot():
    w = parse_word("1 2")
    assert alexander(w).poly == LaurentPoly.constant(1)
    assert jones(w).in_t() == LaurentPoly.constant(1)


@given(words, st.integers(0, 12))
def test_jones_conjugation_invariant(w, k):
    assert jones(w.rotate(k)).poly == jones(w).poly


@given(words)
def test_even_exponent_sum_gives_integer_powers(w):
    v = jones(w)
    assert v.has_integer_t_powers() == (w.exponent_sum % 2 == 0)


@given(words)
def test_determinant_matches_alexander(w):
    assert determinant(w) == abs(eval_int(alexander(w).poly, -1))
