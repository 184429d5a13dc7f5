"""
The verification battery behind ``weavelink verify``.

Each suite compares a closed form with an independent computation over a
range of (n, m) and stops at the first mismatch, which it reports with its
coordinates.  Suites are independent and may run on a thread pool; results
always come back in :data:`SUITES` order.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import braid, cheb_lucas, invariants, shape, weaving
from .laurent import eval_int, substitute_negate

NOTES = (
    "sign convention: the explicit alpha_{n,k} sum carries (-1)^(k-n+i+1); the "
    "variant with (-1)^(k-n+i) differs by a global sign. Rows are normalized to "
    "alpha_{n,0} = +1 and must agree with the exact-division route.",
    "generalized Lucas seeds: L_{m,0} = 2 and L_{m,1} = m. The seed L_{m,1} = 1 "
    "would contradict L_{m,k} = a^k + b^k with a, b = (m +- sqrt(m^2 + 4)) / 2; "
    "det W(3,n,m) is checked as L_{m,2n} - 2 (and det W(3,n) as L_{2n} - 2).",
    "Whitney row 0 is [2] (C_0 = 2 T_0), ahead of the k = 2n branch of the "
    "explicit formula; the explicit formula is compared from n = 1.",
)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    seconds: float = 0.0
    checked: int = 0
    failure: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "seconds": round(self.seconds, 6),
            "checked": self.checked,
            "failure": self.failure,
        }


@dataclass
class VerifyReport:
    results: list[SuiteResult] = field(default_factory=list)
    notes: tuple[str, ...] = NOTES

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


class _Mismatch(Exception):
    pass


def _first_diff(a, b) -> Optional[int]:
    a, b = list(a), list(b)
    for k in range(max(len(a), len(b))):
        if k >= len(a) or k >= len(b) or a[k] != b[k]:
            return k
    return None


def _expect_rows(label: str, n, m, got, want):
    k = _first_diff(got, want)
    if k is not None:
        where = f"n={n}" + (f", m={m}" if m is not None else "") + f", k={k}"
        raise _Mismatch(f"{label}: mismatch at ({where}): {list(got)[:k + 1]} vs {list(want)[:k + 1]}")


def suite_trace(max_n: int, max_m: int) -> int:
    checked = 0
    for m in range(1, max_m + 1):
        step = braid.burau_generator_power(1, m) @ braid.burau_generator_power(2, -m)
        for n in range(1, max_n + 1):
            closed = weaving.weaving_trace(weaving.WeavingSpec(n, m))
            direct = braid.matrix_power(step, n).trace()
            if closed != direct:
                k = _first_diff(closed.terms().items(), direct.terms().items())
                raise _Mismatch(f"trace: mismatch at (n={n}, m={m}, k={k})")
            checked += 1
    return checked


def suite_jones(max_n: int, max_m: int) -> int:
    checked = 0
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            spec = weaving.WeavingSpec(n, m)
            oracle = substitute_negate(invariants.jones(spec.word()).in_t())
            closed = weaving.jones_weaving(spec)
            if closed != oracle:
                raise _Mismatch(f"jones: mismatch at (n={n}, m={m}, k=offset {closed.offset}/{oracle.offset})")
            checked += 1
    for n in range(1, max_n + 1):
        c = cheb_lucas.whitney_c_chebyshev_row(n).values
        want = [c[k] - (abs(k - n) == 1) for k in range(2 * n + 1)]
        _expect_rows("jones coefficients", n, None, weaving.jones_weaving_coeffs(n), want)
        poly = weaving.jones_weaving(weaving.WeavingSpec(n))
        _expect_rows("jones coefficients vs closed form", n, None, [poly.coeff(k - n) for k in range(2 * n + 1)], want)
        checked += 1
    return checked


def suite_alexander_routes(max_n: int, max_m: int) -> int:
    checked = 0
    for n in range(1, max_n + 1):
        ref = weaving.alexander_weaving_division(n)
        _expect_rows("alexander explicit", n, None, weaving.alexander_weaving_explicit(n), ref)
        _expect_rows("alexander recurrence", n, None, weaving.alexander_weaving_recurrence(n), ref)
        _expect_rows(
            "alexander c* partial sums", n, None,
            weaving.cstar_partial_sums(weaving.cstar_row(n)), ref,
        )
        if n <= 12:
            _expect_rows("alexander oracle", n, None, weaving.alexander_weaving_oracle(n), ref)
        checked += 1
    return checked


def suite_whitney_routes(max_n: int, max_m: int) -> int:
    checked = 0
    for n in range(0, max_n + 1):
        ref = cheb_lucas.whitney_c_chebyshev_row(n)
        _expect_rows("whitney recurrence", n, None, cheb_lucas.whitney_c_recurrence_row(n), ref)
        if n >= 1:
            _expect_rows("whitney explicit", n, None, cheb_lucas.whitney_c_explicit_row(n), ref)
        if n <= 30:
            _expect_rows("whitney substitution", n, None, cheb_lucas.whitney_c_substitution_row(n), ref)
        if sum(ref) != cheb_lucas.lucas(2 * n):
            raise _Mismatch(f"whitney row sum: mismatch at (n={n}): {sum(ref)} vs L_{2 * n}")
        checked += 1
    return checked


def suite_determinant(max_n: int, max_m: int) -> int:
    checked = 0
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            spec = weaving.WeavingSpec(n, m)
            closed = weaving.det_weaving(spec)
            oracle = invariants.determinant(spec.word())
            if closed != oracle:
                raise _Mismatch(f"determinant: mismatch at (n={n}, m={m}): {closed} vs {oracle}")
            if m == 1:
                row_sum = sum(weaving.alexander_weaving_division(n))
                if row_sum != cheb_lucas.lucas(2 * n) - 2:
                    raise _Mismatch(f"alexander row sum: mismatch at (n={n}): {row_sum}")
                v1 = abs(eval_int(weaving.jones_weaving(spec), 1))
                if v1 != closed:
                    raise _Mismatch(f"|V(s=1)|: mismatch at (n={n}): {v1} vs {closed}")
            checked += 1
    return checked


def suite_zeros(max_n: int, max_m: int, tol: float = 1e-9) -> int:
    checked = 0
    for n in range(2, max_n + 1):
        if not shape.hoste_check(shape.zeros_closed_form(n), tol):
            raise _Mismatch(f"zeros: Hoste/unit-modulus condition fails at (n={n})")
        if not shape.cross_validate_zeros(n, tol):
            raise _Mismatch(f"zeros: cross-validation fails at (n={n})")
        checked += 1
    return checked


def suite_shape(max_n: int, max_m: int) -> int:
    checked = 0
    for n in range(2, max_n + 1):
        row = weaving.alexander_weaving_division(n)
        rep = shape.trapezoid_check(row)
        if not (rep.is_trapezoidal and rep.r == 0 and rep.is_log_concave):
            raise _Mismatch(f"shape: row not trapezoidal with r = 0 / log-concave at (n={n})")
        t_row = substitute_negate(row.as_poly()).coeffs
        if any(t_row[k] * t_row[k + 1] >= 0 for k in range(len(t_row) - 1)):
            raise _Mismatch(f"shape: t-coefficients do not alternate at (n={n})")
        checked += 1
    return checked


def suite_series(max_n: int, max_m: int) -> int:
    checked = 0
    for n in range(1, max_n + 1):
        rebuilt = cheb_lucas.reassemble_series(cheb_lucas.chebyshev_series_row(n))
        _expect_rows("chebyshev series", n, None, rebuilt, cheb_lucas.chebyshev_coeffs(n))
        checked += 1
    return checked


SUITES: dict[str, Callable[[int, int], int]] = {
    "trace": suite_trace,
    "jones": suite_jones,
    "alexander-routes": suite_alexander_routes,
    "whitney-routes": suite_whitney_routes,
    "determinant": suite_determinant,
    "zeros": suite_zeros,
    "shape": suite_shape,
    "series": suite_series,
}


def run_suite(name: str, max_n: int, max_m: int) -> SuiteResult:
    fn = SUITES[name]
    t0 = time.perf_counter()
    try:
        checked = fn(max_n, max_m)
    except _Mismatch as exc:
        return SuiteResult(name, False, time.perf_counter() - t0, failure=str(exc))
    except Exception as exc:  # a crash inside a suite is a failed verification
        return SuiteResult(name, False, time.perf_counter() - t0, failure=f"{type(exc).__name__}: {exc}")
    return SuiteResult(name, True, time.perf_counter() - t0, checked)


def thread_count() -> int:
    raw = os.environ.get("WEAVE_THREADS", "").strip()
    try:
        value = int(raw) if raw else 0
    except ValueError:
        value = 0
    return value if value > 0 else min(4, os.cpu_count() or 1)


def run(suites: list[str], max_n: int, max_m: int, threads: Optional[int] = None) -> VerifyReport:
    unknown = [s for s in suites if s not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    ordered = [s for s in SUITES if s in suites]
    threads = threads or thread_count()
    if threads == 1 or len(ordered) == 1:
        results = [run_suite(s, max_n, max_m) for s in ordered]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda s: run_suite(s, max_n, max_m), ordered))
    return VerifyReport(results)
