import pytest
from hypothesis import given
from hypothesis import strategies as st

from weavelink import cheb_lucas as cl


def test_chebyshev_rows():
    assert cl.chebyshev_coeffs(0).to_list() == [1]
    assert cl.chebyshev_coeffs(4).to_list() == [1, 0, -8, 0, 8]


def test_series_row_example():
    assert cl.chebyshev_series_row(2).to_list() == [1, -4, 2]
    assert cl.chebyshev_series_row(3).to_list() == [1, -9, 12, -4]


@pytest.mark.parametrize("n", range(1, 25))
def test_series_reassembles(n):
    assert cl.reassemble_series(cl.chebyshev_series_row(n)).to_list() == cl.chebyshev_coeffs(n).to_list()


@given(st.integers(0, 40))
def test_trinomial_row_sums(n):
    row = cl.trinomial_row(n)
    assert sum(row) == 3 ** n
    assert row.is_palindromic()


def test_trinomial_out_of_range():
    assert cl.trinomial(2, -1) == 0 and cl.trinomial(2, 5) == 0 and cl.trinomial(-1, 0) == 0


def test_whitney_examples():
    rows = [cl.whitney_c_chebyshev_row(n).to_list() for n in range(4)]
    assert rows == [[2], [1, 1, 1], [1, 2, 1, 2, 1], [1, 3, 3, 4, 3, 3, 1]]


@pytest.mark.parametrize("n", range(1, 41))
def test_whitney_routes_agree(n):
    ref = cl.whitney_c_chebyshev_row(n)
    assert cl.whitney_c_recurrence_row(n) == ref
    assert cl.whitney_c_explicit_row(n) == ref
    assert cl.whitney_c_substitution_row(n) == ref


@given(st.integers(0, 60))
def test_whitney_row_properties(n):
    row = cl.whitney_c_chebyshev_row(n)
    assert row.is_palindromic()
    assert sum(row) == cl.lucas(2 * n)


def test_lucas():
    assert [cl.lucas(k) for k in range(8)] == [2, 1, 3, 4, 7, 11, 18, 29]
    assert [cl.lucas_general(2, k) for k in range(5)] == [2, 2, 6, 14, 34]


@given(st.integers(1, 6), st.integers(0, 30))
def test_lucas_general_closed_form(m, k):
    # a^k + b^k with a + b = m, ab = -1 satisfies L_{2k} = L_k^2 - 2(-1)^k
    lk = cl.lucas_general(m, k)
    assert cl.lucas_general(m, 2 * k) == lk * lk - 2 * (-1) ** k


def test_lucas_rejects():
    with pytest.raises(ValueError):
        cl.lucas_general(0, 3)
    with pytest.raises(ValueError):
        cl.lucas(-1)


def test_fibonacci_chain_matches_whitney_recurrence():
    rows = [cl.whitney_c_chebyshev_row(n).to_list() for n in range(8)]
    out = cl.fibonacci_f_extend([rows[1], rows[2]], 5)
    assert [r.to_list() for r in out] == rows[3:8]


def test_explicit_needs_positive_n():
    with pytest.raises(ValueError):
        cl.whitney_c_explicit(0, 0)
