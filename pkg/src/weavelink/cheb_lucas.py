"""
Chebyshev polynomials, trinomial coefficients, Whitney numbers of the Lucas
lattice and (generalized) Lucas numbers.

The Whitney numbers c_{n,k} are the coefficients of the Lucas-lattice rank
polynomial C_n(q) = 2 q^n T_n((1 + q + q^2) / (2q)).  Three independent
routes compute them:

* :func:`whitney_c_explicit`, a closed binomial sum for a single entry;
* :func:`whitney_c_chebyshev_row`, the denominator-free recurrence
  C_{n+1} = (1 + q + q^2) C_n - q^2 C_{n-1};
* :func:`whitney_c_recurrence_row`, the entrywise two-row recurrence.

By convention C_0 = 2, so row 0 is ``[2]``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Optional, Sequence

from .laurent import LaurentPoly

__all__ = [
    "CoeffRow",
    "chebyshev_coeffs",
    "chebyshev_series_row",
    "reassemble_series",
    "trinomial",
    "trinomial_row",
    "whitney_c_explicit",
    "whitney_c_explicit_row",
    "whitney_c_chebyshev_row",
    "whitney_c_recurrence_row",
    "whitney_c_substitution_row",
    "lucas",
    "lucas_general",
    "fibonacci_f_extend",
]


@dataclass(frozen=True)
class CoeffRow:
    """An integer sequence indexed from 0, tagged with what it enumerates."""

    values: tuple[int, ...]
    family: str = ""
    n: Optional[int] = None
    m: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def __iter__(self):
        return iter(self.values)

    def get(self, k: int) -> int:
        """Entry ``k``, or 0 outside the row."""
        if 0 <= k < len(self.values):
            return self.values[k]
        return 0

    def is_palindromic(self) -> bool:
        return self.values == self.values[::-1]

    def as_poly(self, offset: int = 0) -> LaurentPoly:
        return LaurentPoly(offset, self.values)

    def to_list(self) -> list[int]:
        return list(self.values)


class _RowCache:
    """Grow-only list of rows, built by ``step(rows) -> next_row``."""

    def __init__(self, seeds: Sequence[tuple[int, ...]], step: Callable):
        self._rows = list(seeds)
        self._step = step
        self._lock = threading.Lock()

    def get(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise ValueError("row index must be nonnegative")
        with self._lock:
            while len(self._rows) <= n:
                self._rows.append(self._step(self._rows))
            return self._rows[n]


def _at(row: Sequence[int], k: int) -> int:
    return row[k] if 0 <= k < len(row) else 0


# -- Chebyshev ---------------------------------------------------------------

def _cheb_step(rows):
    prev, cur = rows[-2], rows[-1]
    nxt = [0] * (len(cur) + 1)
    for i, c in enumerate(cur):
        nxt[i + 1] += 2 * c
    for i, c in enumerate(prev):
        nxt[i] -= c
    return tuple(nxt)


_CHEB = _RowCache([(1,), (0, 1)], _cheb_step)


def chebyshev_coeffs(n: int) -> CoeffRow:
    """Monomial coefficients of T_n(x), lowest degree first."""
    return CoeffRow(_CHEB.get(n), "chebyshev", n)


def chebyshev_series_row(n: int) -> CoeffRow:
    """
    Coefficients ``a_k`` with T_n(x) = sum_k a_k (1 - x)^k, k = 0..n.

    a_k = n (-2)^k (n+k-1)! / ((n-k)! (2k)!), always an integer.

    >>> chebyshev_series_row(2).to_list()
    [1, -4, 2]
    """
    if n < 1:
        raise ValueError("chebyshev_series_row needs n >= 1")
    out = []
    for k in range(n + 1):
        num = n * (-2) ** k * factorial(n + k - 1)
        den = factorial(n - k) * factorial(2 * k)
        q, r = divmod(num, den)
        if r:
            raise ArithmeticError(f"series coefficient (n={n}, k={k}) is not integral")
        out.append(q)
    return CoeffRow(out, "chebyshev-series", n)


def reassemble_series(row: Sequence[int]) -> CoeffRow:
    """Expand sum_k a_k (1 - x)^k into monomial coefficients."""
    one_minus_x = LaurentPoly(0, (1, -1))
    total = LaurentPoly()
    power = LaurentPoly.constant(1)
    for a in row:
        total = total + power * a
        power = power * one_minus_x
    values = list(total.coeffs)
    return CoeffRow([0] * total.offset + values if values else [0], "chebyshev")


# -- trinomial coefficients ---------------------------------------------------

def _tri_step(rows):
    cur = rows[-1]
    nxt = [0] * (len(cur) + 2)
    for i, c in enumerate(cur):
        nxt[i] += c
        nxt[i + 1] += c
        nxt[i + 2] += c
    return tuple(nxt)


_TRI = _RowCache([(1,)], _tri_step)


def trinomial_row(n: int) -> CoeffRow:
    return CoeffRow(_TRI.get(n), "trinomial", n)


def trinomial(n: int, k: int) -> int:
    """Coefficient of q^k in (1 + q + q^2)^n; zero outside 0..2n."""
    if n < 0:
        return 0
    return _at(_TRI.get(n), k)


# -- Whitney numbers of the Lucas lattice -------------------------------------

def _binom(a: int, b: int) -> int:
    # standard extension to a < 0; C(-1, 0) = 1 is needed for c_{n,0}
    if b < 0:
        return 0
    if a >= 0:
        return comb(a, b) if b <= a else 0
    return (-1) ** b * comb(b - a - 1, b)


def whitney_c_explicit(n: int, k: int) -> int:
    """
    c_{n,k} from the closed binomial sum (n >= 1).

    The factor n/(n-j) is not integral term by term, so the sum is accumulated
    as a Fraction and must come out whole.
    """
    if n < 1:
        raise ValueError("the explicit Whitney formula needs n >= 1")
    if k < 0 or k > 2 * n:
        return 0
    if k == 2 * n:
        return 1
    total = Fraction(0)
    for j in range(k // 2 + 1):
        total += Fraction(n * _binom(n - j, n - k + j) * _binom(k - j - 1, j), n - j)
    if total.denominator != 1:
        raise ArithmeticError(f"c_({n},{k}) came out non-integral: {total}")
    return int(total)


def whitney_c_explicit_row(n: int) -> CoeffRow:
    return CoeffRow([whitney_c_explicit(n, k) for k in range(2 * n + 1)], "whitney", n)


def _cheb_whitney_step(rows):
    prev, cur = rows[-2], rows[-1]
    nxt = [0] * (len(cur) + 2)
    for i, c in enumerate(cur):
        nxt[i] += c
        nxt[i + 1] += c
        nxt[i + 2] += c
    for i, c in enumerate(prev):
        nxt[i + 2] -= c
    return tuple(nxt)


_WHITNEY_CHEB = _RowCache([(2,), (1, 1, 1)], _cheb_whitney_step)


def whitney_c_chebyshev_row(n: int) -> CoeffRow:
    """Coefficients of C_n(q) via C_{n+1} = (1 + q + q^2) C_n - q^2 C_{n-1}."""
    return CoeffRow(_WHITNEY_CHEB.get(n), "whitney", n)


def _recurrence_whitney_step(rows):
    n = len(rows)
    prev, prev2 = rows[-1], rows[-2]
    row = [0] * (2 * n + 1)
    row[0] = 1
    row[1] = _at(prev, 1) + _at(prev, 0)
    for k in range(2, 2 * n + 1):
        row[k] = _at(prev, k) + _at(prev, k - 1) + _at(prev, k - 2) - _at(prev2, k - 2)
    return tuple(row)


_WHITNEY_REC = _RowCache([(2,), (1, 1, 1)], _recurrence_whitney_step)


def whitney_c_recurrence_row(n: int) -> CoeffRow:
    """Row n from c_{n,k} = c_{n-1,k} + c_{n-1,k-1} + c_{n-1,k-2} - c_{n-2,k-2}."""
    return CoeffRow(_WHITNEY_REC.get(n), "whitney", n)


def whitney_c_substitution_row(n: int) -> CoeffRow:
    """
    C_n(q) by literally substituting x = (1 + q + q^2)/(2q) into 2 q^n T_n(x).

    2 q^n T_n(x) = sum_j t_j 2^(1-j) q^(n-j) (1 + q + q^2)^j, and 2^(j-1)
    divides t_j for j >= 1, so every term stays integral.
    """
    total = LaurentPoly()
    for j, t in enumerate(chebyshev_coeffs(n).values):
        if t == 0:
            continue
        if j == 0:
            scaled = 2 * t
        else:
            scaled, r = divmod(t, 2 ** (j - 1))
            if r:
                raise ArithmeticError(f"2^{j - 1} does not divide T_{n} coefficient {t}")
        total = total + LaurentPoly(0, _TRI.get(j)).shift(n - j) * scaled
    if total.offset != 0:
        raise ArithmeticError("substituted rank polynomial has a negative power")
    return CoeffRow(total.coeffs, "whitney", n)


# -- Lucas numbers -----------------------------------------------------------

def lucas_general(m: int, k: int) -> int:
    """
    L_{m,k} = m L_{m,k-1} + L_{m,k-2} with L_{m,0} = 2, L_{m,1} = m.

    These seeds make L_{m,k} = a^k + b^k for a, b = (m ± sqrt(m^2 + 4)) / 2.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    a, b = 2, m
    for _ in range(k):
        a, b = b, m * b + a
    return a


def lucas(k: int) -> int:
    """L_0 = 2, L_1 = 1, L_k = L_{k-1} + L_{k-2}."""
    return lucas_general(1, k)


# -- Fibonacci lattice scaffolding --------------------------------------------

def fibonacci_f_extend(base: Sequence[Sequence[int]], steps: int) -> list[CoeffRow]:
    """
    Extend two consecutive even-index rows ``(f_n, f_{n+2})`` by
    f_{n+4,k+2} = f_{n+2,k+2} + f_{n+2,k+1} + f_{n+2,k} - f_{n,k}.

    Rows of the Fibonacci lattice itself are not built in; the caller picks
    them.  Entries at k + 2 < 2 use the same rule with out-of-range terms
    read as zero, i.e. F_{n+4} = (1 + q + q^2) F_{n+2} - q^2 F_n.

    Returns the ``steps`` new rows f_{n+4}, f_{n+6}, ...
    """
    if len(base) != 2:
        raise ValueError("base must hold exactly two rows")
    if steps < 1:
        raise ValueError("steps must be positive")
    prev, cur = tuple(base[0]), tuple(base[1])
    out = []
    for _ in range(steps):
        width = max(len(cur) + 2, len(prev) + 2)
        nxt = [
            _at(cur, j) + _at(cur, j - 1) + _at(cur, j - 2) - _at(prev, j - 2)
            for j in range(width)
        ]
        while len(nxt) > 1 and nxt[-1] == 0:
            nxt.pop()
        out.append(CoeffRow(nxt, "fibonacci"))
        prev, cur = cur, tuple(nxt)
    return out
