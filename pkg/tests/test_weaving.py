from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weavelink import weaving as wv
from weavelink.braid import burau_generator_power, matrix_power
from weavelink.cheb_lucas import lucas, lucas_general
from weavelink.laurent import LaurentPoly

TRIANGLE = {
    int(line.split(",")[0]): [int(v) for v in line.split(",")[1:]]
    for line in (Path(__file__).parent / "data" / "alexander_triangle.csv").read_text().splitlines()
}


def test_weaving_parameters_validated():
    with pytest.raises(ValueError):
        wv.WeavingSpec(0)
    with pytest.raises(ValueError):
        wv.WeavingSpec(2, 0)


@pytest.mark.parametrize("n", sorted(TRIANGLE))
@pytest.mark.parametrize("route", ["explicit", "division", "recurrence"])
def test_triangle_rows(n, route):
    assert wv.ALEXANDER_ROUTES[route](n).to_list() == TRIANGLE[n]


def test_row_ten():
    # first row past the printed triangle
    assert wv.alexander_weaving_division(10).to_list()[:10] == [1, 11, 55, 174, 409, 777, 1243, 1716, 2073, 2207]


@pytest.mark.parametrize("n", range(1, 9))
def test_oracle_matches(n):
    assert wv.alexander_weaving_oracle(n) == wv.alexander_weaving_division(n)


@given(st.integers(1, 50))
def test_routes_agree(n):
    ref = wv.alexander_weaving_division(n)
    assert wv.alexander_weaving_explicit(n) == ref
    assert wv.alexander_weaving_recurrence(n) == ref
    assert wv.cstar_partial_sums(wv.cstar_row(n)) == ref
    assert ref.is_palindromic() and len(ref) == 2 * n - 1


def test_cstar_example():
    assert wv.cstar_row(2).to_list() == [1, 3, 1, 1, 3, 1]


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_trace_matches_matrix_power(n, m):
    step = burau_generator_power(1, m) @ burau_generator_power(2, -m)
    assert wv.weaving_trace(wv.WeavingSpec(n, m)) == matrix_power(step, n).trace()


def test_trace_state():
    state = wv.TraceRecurrenceState.start(1)
    assert state.advance_to(0) == LaurentPoly.constant(2)
    assert state.advance_to(1) == LaurentPoly(0, (1, 1, 1))
    with pytest.raises(ValueError):
        state.step().advance_to(1)


def test_jones_examples():
    assert wv.jones_weaving(wv.WeavingSpec(2)) == LaurentPoly(-2, (1, 1, 1, 1, 1))
    assert wv.jones_weaving(wv.WeavingSpec(1)) == LaurentPoly.constant(1)
    assert wv.jones_weaving_coeffs(1).to_list() == [0, 1, 0]
    assert wv.jones_weaving_coeffs(2).to_list() == [1, 1, 1, 1, 1]


@given(st.integers(1, 10), st.integers(1, 5))
def test_det_formula(n, m):
    assert wv.det_weaving(wv.WeavingSpec(n, m)) == lucas_general(m, 2 * n) - 2


@given(st.integers(1, 60))
def test_alexander_sum_is_det(n):
    assert sum(wv.alexander_weaving_division(n)) == lucas(2 * n) - 2
