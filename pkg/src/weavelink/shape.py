"""
Shape of coefficient rows (trapezoidal / log-concave) and the location of
the zeros of the weaving Alexander polynomials.

The zeros of Delta_{W(3,n)}(t) come in closed form: for 1 <= k <= n // 2,
with c = cos(2 pi k / n) and b = 2c - 1,

    z = -(b ± sqrt(b^2 - 4)) / 2.

The discriminant b^2 - 4 vanishes exactly when 3k = n and is positive
exactly when 3k > n, so the real/non-real split is decided with integers.
The value c = 1 (k = 0) belongs to the factor 1 - s + s^2 that is divided
out, and is not listed.

:func:`numeric_roots` is an independent check that knows nothing about the
closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import NoConvergence
from .laurent import LaurentPoly, canonical_unit_normalize, eval_complex, substitute_negate

__all__ = [
    "TrapezoidReport",
    "ZeroEntry",
    "ZeroSet",
    "trapezoid_check",
    "zeros_closed_form",
    "hoste_check",
    "numeric_roots",
    "numeric_roots_with_multiplicity",
    "cluster_roots",
    "closed_form_residuals",
    "cross_validate_zeros",
    "MAX_SWEEPS",
    "RESIDUAL_FACTOR",
]

MAX_SWEEPS = 200
RESIDUAL_FACTOR = 1e-10


@dataclass(frozen=True)
class TrapezoidReport:
    is_positive: bool
    is_trapezoidal: bool
    is_log_concave: bool
    plateau_lo: Optional[int] = None
    plateau_hi: Optional[int] = None
    r: Optional[int] = None


def trapezoid_check(row: Sequence[int]) -> TrapezoidReport:
    """
    Scan a coefficient row for the trapezoidal shape

        a_0 < ... < a_lo = ... = a_hi > ... > a_last

    and for log-concavity a_k^2 >= a_{k-1} a_{k+1}.  A constant row counts as
    trapezoidal with a plateau over the whole row.  ``r`` (half the plateau
    length) is only reported for palindromic rows.
    """
    vals = list(row)
    if not vals or any(v <= 0 for v in vals):
        return TrapezoidReport(False, False, False)
    log_concave = all(vals[k] ** 2 >= vals[k - 1] * vals[k + 1] for k in range(1, len(vals) - 1))

    last = len(vals) - 1
    lo = 0
    while lo < last and vals[lo] < vals[lo + 1]:
        lo += 1
    hi = lo
    while hi < last and vals[hi] == vals[hi + 1]:
        hi += 1
    j = hi
    while j < last and vals[j] > vals[j + 1]:
        j += 1
    if j != last:
        return TrapezoidReport(True, False, log_concave)

    r = None
    if vals == vals[::-1]:
        r = (hi - lo) // 2
    return TrapezoidReport(True, True, log_concave, lo, hi, r)


@dataclass(frozen=True)
class ZeroEntry:
    k: int
    branch: str  # "+", "-", or "0" for the single value of a vanishing discriminant
    value: complex
    is_real: bool


@dataclass(frozen=True)
class ZeroSet:
    n: int
    entries: tuple[ZeroEntry, ...] = field(default_factory=tuple)

    def values(self) -> list[complex]:
        return [e.value for e in self.entries]

    def __len__(self) -> int:
        return len(self.entries)


def _discriminant_sign(n: int, k: int) -> int:
    return (3 * k > n) - (3 * k < n)


def zeros_closed_form(n: int) -> ZeroSet:
    """Closed-form zeros of Delta_{W(3,n)}(t), k = 1..n//2, without multiplicity."""
    if n < 2:
        raise ValueError("closed-form zeros need n >= 2")
    entries = []
    for k in range(1, n // 2 + 1):
        b = 2 * math.cos(2 * math.pi * k / n) - 1
        sign = _discriminant_sign(n, k)
        if sign == 0:
            entries.append(ZeroEntry(k, "0", complex(1.0, 0.0), True))
        elif sign > 0:
            root = math.sqrt(b * b - 4)
            entries.append(ZeroEntry(k, "+", complex(-(b + root) / 2, 0.0), True))
            entries.append(ZeroEntry(k, "-", complex(-(b - root) / 2, 0.0), True))
        else:
            root = math.sqrt(4 - b * b)
            entries.append(ZeroEntry(k, "+", complex(-b / 2, -root / 2), False))
            entries.append(ZeroEntry(k, "-", complex(-b / 2, root / 2), False))
    return ZeroSet(n, tuple(entries))


def hoste_check(zs: ZeroSet, tol: float) -> bool:
    """Re z > -1 everywhere, and |z| = 1 (within ``tol``) for non-real z."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    for e in zs.entries:
        if e.value.real <= -1:
            return False
        if not e.is_real and abs(abs(e.value) - 1) >= tol:
            return False
    return True


# -- numeric root oracle -------------------------------------------------------

def _working_digits(coeffs: Sequence[int], rho: float) -> int:
    size = max(abs(c) for c in coeffs)
    return 30 + len(str(size)) + int(math.ceil((len(coeffs) - 1) * math.log10(max(1.0, rho) * 1.1)))


def _aberth(coeffs: Sequence[int], start: Sequence[complex], max_sweeps: int):
    """
    Aberth-Ehrlich simultaneous iteration at the current mpmath precision.

    ``coeffs`` run from the highest degree down; the roots must be simple.
    A root is frozen once |p(z)| is within the rounding noise of evaluating
    p at z.
    """
    import mpmath

    unit = mpmath.mpf(10) ** (-mpmath.mp.dps)
    deg = len(coeffs) - 1
    abs_coeffs = [abs(c) for c in coeffs]
    z = [mpmath.mpc(w) for w in start]
    for i in range(deg):
        for j in range(i):
            if abs(z[i] - z[j]) < 1e-12:
                z[i] += mpmath.mpc(1e-6 * (i + 1), 1e-6)
    settled = [False] * deg
    for _ in range(max_sweeps):
        for i in range(deg):
            if settled[i]:
                continue
            zi = z[i]
            p = mpmath.mpc(coeffs[0])
            dp = mpmath.mpc(0)
            noise = mpmath.mpf(abs_coeffs[0])
            r = abs(zi)
            for c, ac in zip(coeffs[1:], abs_coeffs[1:]):
                dp = dp * zi + p
                p = p * zi + c
                noise = noise * r + ac
            if abs(p) <= 8 * deg * unit * noise:
                settled[i] = True
                continue
            ratio = p / dp
            repel = mpmath.fsum(1 / (zi - z[j]) for j in range(deg) if j != i)
            z[i] = zi - ratio / (1 - ratio * repel)
        if all(settled):
            return z
    raise NoConvergence(f"Aberth iteration did not settle within {max_sweeps} sweeps")


def numeric_roots_with_multiplicity(p: LaurentPoly, tol: float = 1e-9) -> list[tuple[complex, int]]:
    """
    Roots of the canonical form of ``p`` as ``(root, multiplicity)`` pairs.

    The polynomial is first split exactly into square-free factors, so each
    factor has simple roots.  Each factor is then solved by Aberth iteration
    in extended precision, started from double-precision companion-matrix
    estimates, with at most ``MAX_SWEEPS`` sweeps.  Every root must satisfy

        |p(root)| <= RESIDUAL_FACTOR * (1 + max |coefficient|)

    at working precision, otherwise :class:`NoConvergence` is raised.
    """
    import mpmath
    import numpy as np
    import sympy

    poly = canonical_unit_normalize(p)
    coeffs = list(poly.coeffs)
    if len(coeffs) < 2:
        raise ValueError("numeric_roots needs a nonconstant polynomial")
    bound = RESIDUAL_FACTOR * (1 + max(abs(c) for c in coeffs))

    x = sympy.Symbol("x")
    _, factors = sympy.Poly(coeffs[::-1], x, domain="ZZ").sqf_list()
    factors = [([int(c) for c in f.all_coeffs()], mult) for f, mult in factors if f.degree() > 0]
    starts = [np.roots([float(c) for c in fc]) for fc, _ in factors]
    rho = max(float(np.max(np.abs(st))) for st in starts)
    digits = max(_working_digits(coeffs, rho), int(-math.log10(tol)) + 20)

    for _attempt in range(3):
        out = []
        ok = True
        with mpmath.workdps(digits):
            for (fc, mult), st in zip(factors, starts):
                for root in _aberth(fc, st, MAX_SWEEPS):
                    if abs(eval_complex(poly, root)) > bound:
                        ok = False
                    out.append((complex(root), mult))
        if ok:
            return out
        digits *= 2
    raise NoConvergence(f"residual above {bound:g} even at {digits // 2} digits")


def numeric_roots(p: LaurentPoly, tol: float = 1e-9) -> list[complex]:
    """All roots of the canonical form of ``p``, repeated by multiplicity."""
    out = []
    for root, mult in numeric_roots_with_multiplicity(p, tol):
        out.extend([root] * mult)
    return out


def cluster_roots(pairs: Sequence[tuple[complex, int]], tol: float) -> list[tuple[complex, int]]:
    """
    Merge nearby roots.  A root of multiplicity ``mu`` joins a cluster within
    ``max(1e-6, tol ** (1 / mu))``; returns ``(center, total multiplicity)``.
    """
    clusters: list[list] = []
    for root, mult in pairs:
        radius = max(1e-6, tol ** (1.0 / mult))
        for cl in clusters:
            if abs(cl[0] - root) <= radius:
                cl[1] += mult
                break
        else:
            clusters.append([root, mult])
    return [(c, m) for c, m in clusters]


def closed_form_residuals(n: int, alexander_s: LaurentPoly) -> list[float]:
    """
    |Delta(s = -z)| for every closed-form zero z, evaluated in high precision.

    Double precision cannot certify the large real zeros (|z| ~ 2.6 with
    degree up to ~200), so both z and the polynomial are evaluated with
    mpmath at a precision that covers the size of the terms.
    """
    import mpmath

    coeffs = alexander_s.coeffs
    size = sum(abs(c) for c in coeffs)
    digits = 30 + len(str(size)) + int(math.ceil(len(coeffs) * math.log10(3)))
    out = []
    with mpmath.workdps(digits):
        for k in range(1, n // 2 + 1):
            b = 2 * mpmath.cos(2 * mpmath.pi * k / n) - 1
            sign = _discriminant_sign(n, k)
            if sign == 0:
                zs = [mpmath.mpf(1)]
            else:
                root = mpmath.sqrt(mpmath.mpc(b * b - 4))
                zs = [-(b + root) / 2, -(b - root) / 2]
            for z in zs:
                out.append(float(abs(eval_complex(alexander_s, -mpmath.mpc(z)))))
    return out


def cross_validate_zeros(n: int, tol: float = 1e-9, alexander_s: Optional[LaurentPoly] = None) -> bool:
    """
    Check the closed-form zeros against the polynomial and against a
    numeric root finder: every closed-form zero must be a root to within
    ``tol * (1 + max |alpha|)``, the distinct values must match the numeric
    clusters one-to-one, and the matched multiplicities must add up to 2n - 2.
    """
    if n < 2:
        raise ValueError("cross-validation needs n >= 2")
    if alexander_s is None:
        from .weaving import alexander_weaving_division

        alexander_s = alexander_weaving_division(n).as_poly()
    scale = 1 + max(abs(c) for c in alexander_s.coeffs)
    if any(r >= tol * scale for r in closed_form_residuals(n, alexander_s)):
        return False

    poly_t = canonical_unit_normalize(substitute_negate(alexander_s))
    clusters = cluster_roots(numeric_roots_with_multiplicity(poly_t, tol), tol)
    closed = zeros_closed_form(n).values()

    used = set()
    total = 0
    for z in closed:
        hits = [
            i for i, (c, mult) in enumerate(clusters)
            if abs(c - z) <= max(1e-6, tol ** (1.0 / mult))
        ]
        if len(hits) != 1 or hits[0] in used:
            return False
        used.add(hits[0])
        total += clusters[hits[0]][1]
    return len(used) == len(clusters) and total == 2 * n - 2
