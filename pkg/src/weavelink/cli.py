"""
Command-line front end.

    weavelink alexander --n 6
    weavelink jones --n 3 --m 2 --check
    weavelink braid --word "1 -2 1 -2" --invariant alexander
    weavelink det --n 4 --m 2
    weavelink table --family alexander --max-n 9 --format csv
    weavelink zeros --n 4
    weavelink verify --suite all --max-n 30 --max-m 4

Exit codes: 0 success, 1 failed check or verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Optional

from . import cheb_lucas, invariants, shape, verify, weaving
from .braid import parse_word
from .errors import BraidSyntaxError
from .laurent import LaurentPoly, canonical_unit_normalize, substitute_negate

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

KINDS = ("alexander", "jones", "determinant", "zeros", "table", "verify")

SUITE_ALIASES = {
    "alexander": "alexander-routes",
    "whitney": "whitney-routes",
}


@dataclass
class OutputRecord:
    kind: str
    variable: str = "t"
    offset: int = 0
    coefficients: list[str] = field(default_factory=list)
    extras: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown record kind {self.kind!r}")
        self.coefficients = [str(int(c)) for c in self.coefficients]

    @classmethod
    def from_poly(cls, kind: str, variable: str, poly: LaurentPoly, **extras) -> OutputRecord:
        return cls(kind, variable, poly.offset, list(poly.coeffs), dict(extras))

    def poly(self) -> LaurentPoly:
        return LaurentPoly(self.offset, [int(c) for c in self.coefficients])

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "variable": self.variable,
            "offset": self.offset,
            "coefficients": list(self.coefficients),
            "extras": self.extras,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> OutputRecord:
        return cls(d["kind"], d["variable"], int(d["offset"]), list(d["coefficients"]), dict(d["extras"]))

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        return cls.from_dict(json.loads(text))


class UsageError(Exception):
    pass


# -- rendering ----------------------------------------------------------------

def _fmt_float(x: float) -> str:
    return repr(float(x))


def render_csv(rec: OutputRecord) -> str:
    lines: list[str] = []
    if rec.kind == "table":
        for row in rec.extras["rows"]:
            lines.append(",".join([str(row["n"])] + row["coefficients"]))
    elif rec.kind == "zeros":
        for z in rec.extras["zeros"]:
            lines.append(f"{z['k']},{z['branch']},{z['re']},{z['im']},{str(z['is_real']).lower()}")
    elif rec.kind == "verify":
        for r in rec.extras["suites"]:
            status = "pass" if r["passed"] else "fail"
            lines.append(f"{r['name']},{status},{r['seconds']:.6f}")
    else:
        for i, c in enumerate(rec.coefficients):
            lines.append(f"{rec.offset + i},{c}")
    return "\n".join(lines) + "\n" if lines else ""


def render_text(rec: OutputRecord) -> str:
    lines: list[str] = []
    if rec.kind == "table":
        lines.append(f"family: {rec.extras['family']}")
        for row in rec.extras["rows"]:
            lines.append(f"{row['n']}: " + ",".join(row["coefficients"]))
    elif rec.kind == "zeros":
        lines.append(f"n: {rec.extras['n']}")
        for z in rec.extras["zeros"]:
            kind = "real" if z["is_real"] else "non-real"
            lines.append(f"k={z['k']} {z['branch']}: {z['re']} {z['im']} ({kind}, |z|={z['modulus']})")
        lines.append(f"hoste: {str(rec.extras['hoste']).lower()}")
        lines.append(f"unit_modulus: {str(rec.extras['unit_modulus']).lower()}")
        lines.append(f"cross_validated: {str(rec.extras['cross_validated']).lower()}")
    elif rec.kind == "verify":
        for r in rec.extras["suites"]:
            status = "PASS" if r["passed"] else "FAIL"
            line = f"{status} {r['name']} ({r['seconds']:.3f}s, {r['checked']} cases)"
            if r["failure"]:
                line += f": {r['failure']}"
            lines.append(line)
        for note in rec.extras["notes"]:
            lines.append(f"note: {note}")
    else:
        lines.append(f"variable: {rec.variable}")
        lines.append(f"offset: {rec.offset}")
        lines.append("coefficients: " + ",".join(rec.coefficients))
        if rec.kind != "determinant":
            lines.append("polynomial: " + rec.poly().format(rec.variable))
        for key, value in rec.extras.items():
            if isinstance(value, (dict, list)):
                value = json.dumps(value)
            elif isinstance(value, bool):
                value = str(value).lower()
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def render(rec: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return rec.to_json() + "\n"
    if fmt == "csv":
        return render_csv(rec)
    return render_text(rec)


# -- commands -----------------------------------------------------------------

def _positive(name: str, value: Optional[int]) -> int:
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required")
    if value < 1:
        raise UsageError(f"--{name.replace('_', '-')} must be >= 1, got {value}")
    return value


def cmd_alexander(args) -> tuple[OutputRecord, int]:
    n = _positive("n", args.n)
    m = _positive("m", args.m)
    route = args.route or ("division" if m == 1 else "oracle")
    if m > 1 and route != "oracle":
        raise UsageError("for m > 1 only the oracle route is available")
    if route == "oracle":
        row = weaving.ALEXANDER_ROUTES["oracle"](n, m)
    else:
        row = weaving.ALEXANDER_ROUTES[route](n)
    extras: dict[str, Any] = {"n": n, "m": m, "route": route}
    code = EXIT_OK
    if args.check:
        routes = list(weaving.ALEXANDER_ROUTES) if m == 1 else ["oracle"]
        agree = {}
        for name in routes:
            other = weaving.ALEXANDER_ROUTES[name](n) if name != "oracle" else weaving.alexander_weaving_oracle(n, m)
            agree[name] = list(other) == list(row)
        extras["check"] = agree
        if not all(agree.values()):
            code = EXIT_FAIL
    return OutputRecord("alexander", "s", 0, list(row), extras), code


def cmd_jones(args) -> tuple[OutputRecord, int]:
    spec = weaving.WeavingSpec(_positive("n", args.n), _positive("m", args.m))
    poly = weaving.jones_weaving(spec)
    extras: dict[str, Any] = {"n": spec.n, "m": spec.m}
    code = EXIT_OK
    if args.check:
        oracle = substitute_negate(invariants.jones(spec.word()).in_t())
        extras["check"] = {"oracle": oracle == poly}
        if oracle != poly:
            code = EXIT_FAIL
    return OutputRecord.from_poly("jones", "s", poly, **extras), code


def _word(args):
    if not args.word:
        raise UsageError("--word is required")
    try:
        return parse_word(args.word)
    except BraidSyntaxError as exc:
        raise UsageError(str(exc)) from exc


def cmd_braid(args) -> tuple[OutputRecord, int]:
    w = _word(args)
    which = args.invariant
    extras: dict[str, Any] = {"word": str(w), "exponent_sum": w.exponent_sum}
    if which == "det":
        value = invariants.determinant(w)
        return OutputRecord("determinant", "t", 0, [value], extras), EXIT_OK
    if which == "alexander":
        poly_t = invariants.alexander(w).poly
        variable = args.variable or "s"
        if variable == "s" and not poly_t.is_zero():
            poly = canonical_unit_normalize(substitute_negate(poly_t))
        else:
            poly = poly_t
        return OutputRecord.from_poly("alexander", variable, poly, **extras), EXIT_OK
    value = invariants.jones(w)
    if not value.has_integer_t_powers():
        if args.variable in ("t", "s"):
            raise UsageError("this closure has half-integer t-powers; use --variable x")
        return OutputRecord.from_poly("jones", "x", value.poly, **extras), EXIT_OK
    variable = args.variable or "t"
    poly = value.poly if variable == "x" else (value.in_s() if variable == "s" else value.in_t())
    return OutputRecord.from_poly("jones", variable, poly, **extras), EXIT_OK


def cmd_det(args) -> tuple[OutputRecord, int]:
    if args.word:
        w = _word(args)
        value = invariants.determinant(w)
        return OutputRecord("determinant", "t", 0, [value], {"word": str(w)}), EXIT_OK
    spec = weaving.WeavingSpec(_positive("n", args.n), _positive("m", args.m))
    value = weaving.det_weaving(spec)
    extras: dict[str, Any] = {"n": spec.n, "m": spec.m}
    code = EXIT_OK
    if args.check:
        oracle = invariants.determinant(spec.word())
        extras["check"] = {"oracle": oracle == value}
        if oracle != value:
            code = EXIT_FAIL
    return OutputRecord("determinant", "t", 0, [value], extras), code


def table_rows(family: str, max_n: int) -> list[tuple[int, list[int]]]:
    if family == "alexander":
        return [(n, list(weaving.alexander_weaving_division(n))) for n in range(1, max_n + 1)]
    if family == "whitney":
        return [(n, list(cheb_lucas.whitney_c_chebyshev_row(n))) for n in range(0, max_n + 1)]
    if family == "jones":
        return [(n, list(weaving.jones_weaving_coeffs(n))) for n in range(1, max_n + 1)]
    raise UsageError(f"unknown family {family!r}")


def cmd_table(args) -> tuple[OutputRecord, int]:
    max_n = _positive("max_n", args.max_n)
    rows = [{"n": n, "coefficients": [str(v) for v in row]} for n, row in table_rows(args.family, max_n)]
    variable = "q" if args.family == "whitney" else "s"
    return OutputRecord("table", variable, 0, [], {"family": args.family, "rows": rows}), EXIT_OK


def cmd_zeros(args) -> tuple[OutputRecord, int]:
    n = _positive("n", args.n)
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    alex_s = weaving.alexander_weaving_division(n).as_poly()
    poly_t = canonical_unit_normalize(substitute_negate(alex_s))
    if n == 1:
        extras = {"n": 1, "zeros": [], "hoste": True, "unit_modulus": True, "cross_validated": True}
        return OutputRecord.from_poly("zeros", "t", poly_t, **extras), EXIT_OK
    zs = shape.zeros_closed_form(n)
    zeros = [
        {
            "k": e.k,
            "branch": e.branch,
            "re": _fmt_float(e.value.real),
            "im": _fmt_float(e.value.imag),
            "is_real": e.is_real,
            "modulus": _fmt_float(abs(e.value)),
        }
        for e in zs.entries
    ]
    unit = all(e.is_real or abs(abs(e.value) - 1) < args.tol for e in zs.entries)
    hoste = shape.hoste_check(zs, args.tol)
    crossed = shape.cross_validate_zeros(n, args.tol, alex_s)
    extras = {"n": n, "zeros": zeros, "hoste": hoste, "unit_modulus": unit, "cross_validated": crossed}
    return OutputRecord.from_poly("zeros", "t", poly_t, **extras), EXIT_OK if crossed else EXIT_FAIL


def _suite_names(selector: str) -> list[str]:
    if selector == "all":
        return list(verify.SUITES)
    names = []
    for part in selector.split(","):
        part = part.strip()
        name = SUITE_ALIASES.get(part, part)
        if name not in verify.SUITES:
            choices = ", ".join(["all", *verify.SUITES, *SUITE_ALIASES])
            raise UsageError(f"unknown suite {part!r} (choose from {choices})")
        names.append(name)
    return names


def cmd_verify(args) -> tuple[OutputRecord, int]:
    names = _suite_names(args.suite)
    max_n = _positive("max_n", args.max_n)
    max_m = _positive("max_m", args.max_m)
    report = verify.run(names, max_n, max_m)
    extras = {
        "max_n": max_n,
        "max_m": max_m,
        "suites": [r.to_dict() for r in report.results],
        "notes": list(report.notes),
        "passed": report.passed,
    }
    return OutputRecord("verify", "t", 0, [], extras), EXIT_OK if report.passed else EXIT_FAIL


COMMANDS = {
    "alexander": cmd_alexander,
    "jones": cmd_jones,
    "braid": cmd_braid,
    "det": cmd_det,
    "table": cmd_table,
    "zeros": cmd_zeros,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")

    parser = argparse.ArgumentParser(prog="weavelink", description="Invariants of weaving links and 3-braid closures.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alexander", parents=[common], help="Alexander coefficients of W(3,n,m) in s = -t")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--route", choices=tuple(weaving.ALEXANDER_ROUTES))
    p.add_argument("--check", action="store_true", help="run every available route and compare")

    p = sub.add_parser("jones", parents=[common], help="Jones polynomial of W(3,n,m) in s = -t")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--check", action="store_true", help="compare with the Burau trace formula")

    p = sub.add_parser("braid", parents=[common], help="invariants of the closure of a 3-braid word")
    p.add_argument("--word", required=True, help='signed generator indices, e.g. "1 -2 1 -2"')
    p.add_argument("--invariant", choices=("alexander", "jones", "det"), default="alexander")
    p.add_argument("--variable", choices=("t", "s", "x"))

    p = sub.add_parser("det", parents=[common], help="determinant of W(3,n,m) or of a braid closure")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--word")
    p.add_argument("--check", action="store_true")

    p = sub.add_parser("table", parents=[common], help="coefficient triangles")
    p.add_argument("--family", choices=("alexander", "whitney", "jones"), default="alexander")
    p.add_argument("--max-n", type=int, default=10)

    p = sub.add_parser("zeros", parents=[common], help="zeros of the Alexander polynomial of W(3,n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("verify", parents=[common], help="run the verification battery")
    p.add_argument("--suite", default="all", help="all, or a comma-separated list of suite names")
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--max-m", type=int, default=4)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if args.command == "braid" and args.invariant == "det" and args.variable:
        args.variable = None
    try:
        record, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"weavelink {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(record, args.format))
    if code == EXIT_FAIL and args.format != "text":
        print(f"weavelink {args.command}: check failed", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
