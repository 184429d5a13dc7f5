"""Exact invariants of weaving links and closures of 3-braids."""

from .braid import BraidWord3, BurauMatrix, burau_generator_power, burau_of_word, parse_word
from .cheb_lucas import (
    CoeffRow,
    lucas,
    lucas_general,
    trinomial,
    whitney_c_chebyshev_row,
    whitney_c_explicit_row,
    whitney_c_recurrence_row,
)
from .invariants import alexander, determinant, jones
from .laurent import LaurentPoly
from .shape import cross_validate_zeros, hoste_check, trapezoid_check, zeros_closed_form
from .weaving import (
    WeavingSpec,
    alexander_weaving_division,
    alexander_weaving_explicit,
    alexander_weaving_oracle,
    alexander_weaving_recurrence,
    det_weaving,
    jones_weaving,
    jones_weaving_coeffs,
    weaving_trace,
)

__version__ = "0.1.0"
