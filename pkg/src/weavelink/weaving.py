"""
Closed forms for weaving links W(3, n) and generalized weaving links
W(3, n, m), the closures of (sigma_1^m sigma_2^-m)^n.

All polynomials here are in the variable s = -t.

The eigenvalues of psi_s(sigma_1^m sigma_2^-m) (scaled by s^m) are never
formed.  Their halves are the roots of y^2 - P y + s^(2m) with
P = 1 + [m]^2 s + s^(2m), so the power sums w_j obey

    w_0 = 2,  w_1 = P,  w_{j+1} = P w_j - s^(2m) w_{j-1},

and tr psi_s(b_{n,m}) = s^(-nm) w_n = 2 T_n(P / (2 s^m)).

Three Alexander routes exist for m = 1 (explicit sum, exact division,
row recurrence) plus the Burau oracle in :mod:`weavelink.invariants`; for
m >= 2 only the oracle is available.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .braid import BraidWord3, q_bracket
from .cheb_lucas import (
    CoeffRow,
    lucas_general,
    trinomial,
    whitney_c_chebyshev_row,
)
from .invariants import alexander
from .laurent import (
    LaurentPoly,
    canonical_unit_normalize,
    exact_div,
    substitute_negate,
)

__all__ = [
    "WeavingSpec",
    "TraceRecurrenceState",
    "weaving_trace",
    "jones_weaving",
    "jones_weaving_coeffs",
    "alexander_weaving_explicit",
    "alexander_weaving_division",
    "alexander_weaving_recurrence",
    "alexander_weaving_oracle",
    "cstar_row",
    "cstar_partial_sums",
    "det_weaving",
    "ALEXANDER_ROUTES",
]


@dataclass(frozen=True)
class WeavingSpec:
    n: int
    m: int = 1

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"weaving parameters must be positive, got n={self.n}, m={self.m}")

    def word(self) -> BraidWord3:
        return BraidWord3.weaving(self.n, self.m)


@dataclass(frozen=True)
class TraceRecurrenceState:
    """
    Radical-free stand-in for the eigenvalue pair.

    ``sum`` and ``prod`` are lambda_1 + lambda_2 and lambda_1 * lambda_2;
    ``w_prev``, ``w_curr`` are consecutive power sums of lambda_i / 2.
    """

    sum: LaurentPoly
    prod: LaurentPoly
    w_prev: LaurentPoly
    w_curr: LaurentPoly
    index: int = 1

    @classmethod
    def start(cls, m: int) -> TraceRecurrenceState:
        half_sum = 1 + q_bracket(m) * q_bracket(m) * LaurentPoly.monomial(1) + LaurentPoly.monomial(2 * m)
        return cls(
            sum=2 * half_sum,
            prod=LaurentPoly.monomial(2 * m, 4),
            w_prev=LaurentPoly.constant(2),
            w_curr=half_sum,
        )

    def step(self) -> TraceRecurrenceState:
        # (sum/2) w_j - (prod/4) w_{j-1}; both halvings are exact
        half_sum = exact_div(self.sum, LaurentPoly.constant(2))
        quarter_prod = exact_div(self.prod, LaurentPoly.constant(4))
        nxt = half_sum * self.w_curr - quarter_prod * self.w_prev
        return TraceRecurrenceState(self.sum, self.prod, self.w_curr, nxt, self.index + 1)

    def advance_to(self, n: int) -> LaurentPoly:
        """w_n, stepping forward from the current index."""
        if n == 0:
            return LaurentPoly.constant(2)
        if n < self.index:
            raise ValueError(f"state is already at index {self.index}")
        state = self
        while state.index < n:
            state = state.step()
        return state.w_curr


def weaving_trace(spec: WeavingSpec) -> LaurentPoly:
    """tr psi_s((sigma_1^m sigma_2^-m)^n) = s^(-nm) w_n."""
    w_n = TraceRecurrenceState.start(spec.m).advance_to(spec.n)
    return w_n.shift(-spec.n * spec.m)


def jones_weaving(spec: WeavingSpec) -> LaurentPoly:
    """V_{W(3,n,m)}(s) = -s - s^-1 + 2 T_n(P / (2 s^m))."""
    return weaving_trace(spec) - LaurentPoly.monomial(1) - LaurentPoly.monomial(-1)


def jones_weaving_coeffs(n: int) -> CoeffRow:
    """
    a_0..a_{2n} with V_{W(3,n)}(s) = sum_k a_k s^(k-n).

    a_k is the Whitney number c_{n,k}, less one at k = n - 1 and k = n + 1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    a = list(whitney_c_chebyshev_row(n).values)
    a[n - 1] -= 1
    a[n + 1] -= 1
    return CoeffRow(a, "jones", n, 1)


def _series_factor(n: int, i: int) -> int:
    """2n (n+i)! / ((n-i-1)! (2i+2)!), an integer for 0 <= i < n."""
    num = 2 * n * factorial(n + i)
    den = factorial(n - i - 1) * factorial(2 * i + 2)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"series factor (n={n}, i={i}) is not integral")
    return q


def alexander_weaving_explicit(n: int) -> CoeffRow:
    """
    alpha_{n,k} = sum_i (-1)^(k-n+i+1) 2n(n+i)!/((n-i-1)!(2i+2)!) * tri(i, k+i-n+1).

    The overall sign is pinned so that alpha_{n,0} = +1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    factors = [_series_factor(n, i) for i in range(n)]
    row = []
    for k in range(2 * n - 1):
        total = 0
        for i, f in enumerate(factors):
            tri = trinomial(i, k + i - n + 1)
            if tri:
                term = f * tri
                total += -term if (k - n + i + 1) % 2 else term
        row.append(total)
    if row[0] < 0:
        row = [-v for v in row]
    return CoeffRow(row, "alexander", n, 1)


_ONE_MINUS_S_PLUS_S2 = LaurentPoly(0, (1, -1, 1))


def alexander_weaving_division(n: int) -> CoeffRow:
    """(2 - s^-n C_n(s)) / (1 - s + s^2), in canonical unit form."""
    if n < 1:
        raise ValueError("n must be positive")
    numerator = 2 - whitney_c_chebyshev_row(n).as_poly(-n)
    quotient = exact_div(numerator, _ONE_MINUS_S_PLUS_S2)
    return CoeffRow(canonical_unit_normalize(quotient).coeffs, "alexander", n, 1)


def alexander_weaving_recurrence(n: int) -> CoeffRow:
    """
    Rows built upward from [1] and [1, 3, 1]:

        alpha_{n,0}   = 1
        alpha_{n,1}   = alpha_{n-1,1} + alpha_{n-1,0}
        alpha_{n,k}   = alpha_{n-1,k} + alpha_{n-1,k-1} + alpha_{n-1,k-2} - alpha_{n-2,k-2}
                        for 1 < k < n-1
        alpha_{n,n-1} = (same four terms) + 2

    The upper half k > n-1 is the mirror image of the lower half.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rows = [None, (1,), (1, 3, 1)]
    for j in range(3, n + 1):
        prev, prev2 = rows[j - 1], rows[j - 2]

        def at(row, k):
            return row[k] if 0 <= k < len(row) else 0

        half = [1, at(prev, 1) + at(prev, 0)]
        for k in range(2, j):
            v = at(prev, k) + at(prev, k - 1) + at(prev, k - 2) - at(prev2, k - 2)
            if k == j - 1:
                v += 2
            half.append(v)
        rows.append(tuple(half + half[-2::-1]))
    return CoeffRow(rows[n], "alexander", n, 1)


def alexander_weaving_oracle(n: int, m: int = 1) -> CoeffRow:
    """Canonical s-row from the Burau Alexander polynomial of the braid word."""
    spec = WeavingSpec(n, m)
    poly_t = alexander(spec.word()).poly
    if poly_t.is_zero():
        return CoeffRow((), "alexander", n, m)
    poly_s = canonical_unit_normalize(substitute_negate(poly_t))
    return CoeffRow(poly_s.coeffs, "alexander", n, m)


ALEXANDER_ROUTES = {
    "explicit": alexander_weaving_explicit,
    "division": alexander_weaving_division,
    "recurrence": alexander_weaving_recurrence,
    "oracle": alexander_weaving_oracle,
}


def cstar_row(n: int) -> CoeffRow:
    """
    c*_{n,0..2n+1}: coefficients of (1 + s)(C_n(s) - 2 s^n).

    c*_0 = 1, c*_k = c_k + c_{k-1} for 0 < k < n, c*_n = c_n + c_{n-1} - 2,
    and c*_k = c*_{2n+1-k} above n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    c = whitney_c_chebyshev_row(n).values
    low = [c[0]] + [c[k] + c[k - 1] for k in range(1, n)] + [c[n] + c[n - 1] - 2]
    return CoeffRow(low + low[::-1], "cstar", n)


def cstar_partial_sums(row: CoeffRow) -> CoeffRow:
    """alpha_k = c*_k - c*_{k-3} + c*_{k-6} - ..., for k = 0..2n-2."""
    n = row.n if row.n is not None else (len(row) - 2) // 2
    out = []
    for k in range(2 * n - 1):
        total = 0
        for i, j in enumerate(range(k, -1, -3)):
            total += -row[j] if i % 2 else row[j]
        out.append(total)
    return CoeffRow(out, "alexander", n, 1)


def det_weaving(spec: WeavingSpec) -> int:
    """det W(3, n, m) = L_{m,2n} - 2."""
    return lucas_general(spec.m, 2 * spec.n) - 2
