"""Command-line front end.

Exit codes: 0 ok, 2 invalid input, 3 internal cross-check mismatch,
4 unsupported combination, 5 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .degrees import (
    ConsistencyError,
    UnsupportedCaseError,
    lambda1_degree,
    lambda1_degree_compact,
    lambda1e_degree,
)
from .monodromy import InvalidDatumError, MonodromyDatum, cover_invariants, new_datum, rank_eigenbundle
from .numeric import format_rational, parse_rational, to_decimal
from .tautring import canonicalize, graph_formula_lambda1, graph_formula_lambda1e_question
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3
EXIT_UNSUPPORTED = 4
EXIT_VERIFY_FAILED = 5

CSV_COLUMNS = ["d", "m", "e", "quantity", "num", "den", "decimal", "connected"]


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class OutputRecord:
    d: int
    m: tuple[int, ...]
    connected: bool
    quantity: str
    value: Fraction
    e: int | None = None
    provenance: str = "closed-form"

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "m": list(self.m),
            "connected": self.connected,
            "e": self.e,
            "quantity": self.quantity,
            "value": format_rational(self.value),
            "decimal": to_decimal(self.value),
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "OutputRecord":
        return cls(
            d=int(obj["d"]),
            m=tuple(obj["m"]),
            connected=bool(obj["connected"]),
            quantity=obj["quantity"],
            value=parse_rational(obj["value"]),
            e=obj.get("e"),
            provenance=obj.get("provenance", "closed-form"),
        )

    def csv_row(self) -> list:
        return [
            self.d,
            ";".join(map(str, self.m)),
            "" if self.e is None else self.e,
            self.quantity,
            self.value.numerator,
            self.value.denominator,
            to_decimal(self.value),
            str(self.connected).lower(),
        ]


def _record(datum: MonodromyDatum, quantity: str, value: Fraction, e=None, provenance="closed-form"):
    return OutputRecord(datum.d, datum.m, datum.is_connected(), quantity, value, e, provenance)


def _emit(records: Sequence[OutputRecord], fmt: str, text_lines: Sequence[str]) -> None:
    out = sys.stdout
    if fmt == "json":
        payload = records[0].to_dict() if len(records) == 1 else [r.to_dict() for r in records]
        out.write(json.dumps(payload) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow(r.csv_row())
        out.write(buf.getvalue())
    else:
        for line in text_lines:
            out.write(line + "\n")


def _parse_datum(d: int, raw: str) -> MonodromyDatum:
    try:
        values = [int(x) for x in raw.split(",") if x.strip()]
    except ValueError:
        raise CliError(f"monodromies must be comma-separated integers: {raw!r}", EXIT_INVALID)
    if d < 1:
        raise CliError(f"--d must be a positive integer, got {d}", EXIT_INVALID)
    if any(not 0 <= x < d for x in values):
        reduced = ",".join(str(x % d) for x in values)
        print(f"warning: monodromies reduced mod {d} to {reduced}", file=sys.stderr)
    try:
        return new_datum(d, values)
    except InvalidDatumError as exc:
        raise CliError(str(exc), EXIT_INVALID)


def _fmt(args) -> str:
    if getattr(args, "json", False):
        return "json"
    if getattr(args, "csv", False):
        return "csv"
    return "text"


def cmd_lambda1(args) -> int:
    datum = _parse_datum(args.d, args.m)
    if datum.n != 4:
        raise CliError(f"lambda1 is computed on 4-pointed spaces, got n = {datum.n}", EXIT_INVALID)
    value = lambda1_degree(datum)
    compact = lambda1_degree_compact(datum)
    if value != compact:
        raise CliError(f"power-set form {value} != compact form {compact} for {datum}", EXIT_MISMATCH)
    lines = [format_rational(value)]
    if not datum.is_connected():
        print(f"warning: {datum} is disconnected; value is the arithmetic formula only", file=sys.stderr)
    _emit([_record(datum, "lambda1", value)], _fmt(args), lines)
    return EXIT_OK


def cmd_lambda1e(args) -> int:
    datum = _parse_datum(args.d, args.m)
    if datum.n != 4:
        raise CliError(f"lambda1e is computed on 4-pointed spaces, got n = {datum.n}", EXIT_INVALID)
    if not datum.is_connected():
        raise CliError(f"{datum} is not connected", EXIT_INVALID)
    if args.all_e:
        records = [_record(datum, "lambda1e", lambda1e_degree(datum, e), e) for e in range(datum.d)]
        total = sum((r.value for r in records), Fraction(0))
        full = lambda1_degree(datum)
        records.append(_record(datum, "sum_e lambda1e", total, provenance="eigen-sum"))
        records.append(_record(datum, "lambda1", full))
        width = len(str(datum.d - 1))
        lines = [f"e={r.e:>{width}}  {format_rational(r.value)}" for r in records[:-2]]
        mark = "ok" if total == full else "MISMATCH"
        lines.append(f"sum  {format_rational(total)}  lambda1 {format_rational(full)}  {mark}")
        _emit(records, _fmt(args), lines)
        if total != full:
            print(f"error: eigen-sum {total} != lambda1 {full} for {datum}", file=sys.stderr)
            return EXIT_MISMATCH
        return EXIT_OK
    if args.e is None:
        raise CliError("give --e E or --all-e", EXIT_INVALID)
    if not 0 <= args.e < datum.d:
        raise CliError(f"--e must lie in [0, {datum.d}), got {args.e}", EXIT_INVALID)
    value = lambda1e_degree(datum, args.e)
    _emit([_record(datum, "lambda1e", value, args.e)], _fmt(args), [format_rational(value)])
    return EXIT_OK


def cmd_graph_formula(args) -> int:
    datum = _parse_datum(args.d, args.m)
    if datum.n < 4:
        raise CliError(f"graph formulas need n >= 4, got n = {datum.n}", EXIT_INVALID)
    if args.e is not None:
        if datum.n != 4:
            raise CliError("--e is only supported for 4-pointed data", EXIT_UNSUPPORTED)
        if not 0 <= args.e < datum.d:
            raise CliError(f"--e must lie in [0, {datum.d}), got {args.e}", EXIT_INVALID)
        cls = graph_formula_lambda1e_question(datum, args.e)
    else:
        cls = graph_formula_lambda1(datum)
    if args.canonical:
        cls = canonicalize(cls)
    if args.json:
        sys.stdout.write(cls.to_json() + "\n")
        return EXIT_OK
    name = "lambda1" if args.e is None else f"lambda1^{args.e}"
    print(f"{name} on {datum}:")
    coeffs = [format_rational(c) for _, c in cls.terms]
    width = max((len(c) for c in coeffs), default=1)
    for (sym, _), c in zip(cls.terms, coeffs):
        print(f"  {c:>{width}}  {sym}")
    if not cls.terms:
        print("  0")
    return EXIT_OK


def cmd_info(args) -> int:
    datum = _parse_datum(args.d, args.m)
    inv = cover_invariants(datum)
    ranks = [rank_eigenbundle(datum, e) for e in range(datum.d)]
    fmt = _fmt(args)
    if fmt == "json":
        sys.stdout.write(json.dumps({
            "d": datum.d, "m": list(datum.m), "connected": datum.is_connected(),
            "genus": inv.genus, "q": list(inv.q), "r": list(inv.r),
            "dimension": datum.dimension, "ranks": ranks,
        }) + "\n")
        return EXIT_OK
    records = [_record(datum, "genus", Fraction(inv.genus)), _record(datum, "dimension", Fraction(datum.dimension))]
    records += [_record(datum, "rank E_e", Fraction(r), e) for e, r in enumerate(ranks)]
    lines = [
        f"datum      {datum}",
        f"connected  {datum.is_connected()}",
        f"genus      {inv.genus}",
        f"q          {list(inv.q)}",
        f"r          {list(inv.r)}",
        f"dimension  {datum.dimension}",
        f"ranks      {ranks}",
    ]
    _emit(records, fmt, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.dmax < 1:
        raise CliError("--dmax must be >= 1", EXIT_INVALID)
    if args.nmax < 4:
        raise CliError("--nmax must be >= 4", EXIT_INVALID)
    result = run_suite(args.suite, args.dmax, args.nmax, jobs=max(1, args.jobs))
    if args.json:
        sys.stdout.write(json.dumps(result.to_dict()) + "\n")
    else:
        status = "PASS" if result.ok else "FAIL"
        print(
            f"verify {args.suite}: {status}  data={result.data_checked} "
            f"comparisons={result.comparisons} failed={len(result.failures)}"
            + (f" geometric_caveat={result.caveats}" if result.caveats else "")
        )
        for f in result.failures:
            print("  " + json.dumps(f))
    return EXIT_OK if result.ok else EXIT_VERIFY_FAILED


def _add_datum_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--d", type=int, required=True, help="cyclic group order")
    p.add_argument("--m", required=True, help="comma-separated monodromies")


def _add_format_args(p: argparse.ArgumentParser, csv_ok: bool = True) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true")
    if csv_ok:
        group.add_argument("--csv", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hodge-degrees", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda1", help="degree of lambda_1 on a 4-pointed space")
    _add_datum_args(p)
    _add_format_args(p)
    p.set_defaults(func=cmd_lambda1)

    p = sub.add_parser("lambda1e", help="degree of lambda_1^e on a 4-pointed space")
    _add_datum_args(p)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--e", type=int)
    which.add_argument("--all-e", action="store_true")
    _add_format_args(p)
    p.set_defaults(func=cmd_lambda1e)

    p = sub.add_parser("graph-formula", help="lambda_1 (or lambda_1^e for n=4) as a divisor class")
    _add_datum_args(p)
    p.add_argument("--canonical", action="store_true", help="merge each boundary divisor with its complement")
    p.add_argument("--e", type=int)
    _add_format_args(p, csv_ok=False)
    p.set_defaults(func=cmd_graph_formula)

    p = sub.add_parser("info", help="genus, ramification and eigenbundle ranks")
    _add_datum_args(p)
    _add_format_args(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("verify", help="exhaustive cross-checks")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--jobs", type=int, default=int(os.environ.get("HODGE_DEGREES_JOBS", "1")))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except InvalidDatumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except UnsupportedCaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
