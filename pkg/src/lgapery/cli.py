"""Command-line front end.

Subcommands: catalog, run, periods, pfop, singular, tempered, apery,
check-v16. All results are UTF-8 JSON on stdout; diagnostics and errors go
to stderr. Exit codes: 0 success, 2 parse error, 3 geometry precondition,
4 discovery failure, 5 convergence/limit failure, 6 recognition absent
under --require-recognition.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction

from . import catalog as catalog_mod
from .apery import (
    AperyPreconditionError,
    ConvergenceError,
    SolveError,
    apery_limit,
)
from .hpreal import QuadratureError, recognize, v16_membrane_value, zeta3
from .jsonutil import frac_str
from .laurent import LaurentPolynomial, ParseError, parse
from .periods import period_sequence, period_sequence_naive
from .pfops import (
    DiscoveryError,
    OperatorError,
    involution,
    operator_from_series,
    singular_points,
    symbol,
    to_recurrence,
)
from .polytope import GeometryError, newton_polytope, temperedness_check

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_GEOMETRY = 3
EXIT_DISCOVERY = 4
EXIT_CONVERGENCE = 5
EXIT_RECOGNITION = 6

_ERROR_CODES = (
    (ParseError, EXIT_PARSE, "parse"),
    (GeometryError, EXIT_GEOMETRY, "geometry"),
    (DiscoveryError, EXIT_DISCOVERY, "discovery"),
    (OperatorError, EXIT_DISCOVERY, "discovery"),
    (AperyPreconditionError, EXIT_CONVERGENCE, "apery"),
    (ConvergenceError, EXIT_CONVERGENCE, "apery"),
    (SolveError, EXIT_CONVERGENCE, "apery"),
    (QuadratureError, EXIT_CONVERGENCE, "quadrature"),
)


class RecognitionAbsent(Exception):
    pass


class OracleMismatch(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _fail(stage: str, exc: Exception, code: int) -> int:
    sys.stderr.write(json.dumps(
        {"error": {"stage": stage, "type": type(exc).__name__,
                   "message": str(exc)}}) + "\n")
    return code


def _resolve_input(text: str) -> tuple[str | None, LaurentPolynomial]:
    entry = catalog_mod.get(text)
    if entry is not None:
        return entry.name, entry.phi
    return None, parse(text, 3)


def _parse_ansatz(spec: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)x(\d+)", spec)
    if not m:
        raise argparse.ArgumentTypeError(
            f"ansatz must look like '4x4', got {spec!r}")
    return int(m.group(1)), int(m.group(2))


def _operator_json(op) -> dict:
    return {
        "order": op.order,
        "degree": op.degree,
        "coeffs": [[frac_str(c) for c in row] for row in op.coeffs],
    }


def _periods_json(phi: LaurentPolynomial, values) -> dict:
    return {"phi": phi.to_text(), "a": [frac_str(v) for v in values]}


def _run_oracle(phi: LaurentPolynomial, values, cap: int = 8) -> dict:
    n = min(cap, len(values) - 1)
    naive = period_sequence_naive(phi, n)
    if naive.values != list(values[: n + 1]):
        raise OracleMismatch(
            f"pruned and naive period sequences disagree within {n} terms")
    return {"checked_terms": n, "match": True}


def _pipeline(phi: LaurentPolynomial, name: str | None, args,
              need_operator: bool, need_apery: bool) -> dict:
    timings: dict[str, float] = {}

    def clock(stage, fn):
        t0 = time.perf_counter()
        out = fn()
        timings[stage] = time.perf_counter() - t0
        return out

    report: dict = {
        "input": {"name": name, "phi": phi.to_text(), "dimension": phi.dimension},
    }
    clock("polytope", lambda: newton_polytope(phi))
    tempered = clock("tempered", lambda: temperedness_check(phi))
    report["tempered"] = tempered.to_json_dict()

    # Period-only invocations read --terms as the period count.
    if need_operator or args.terms is None:
        n_discovery = args.discovery_terms
    else:
        n_discovery = args.terms
    seq = clock("periods", lambda: period_sequence(phi, n_discovery))
    report["periods"] = _periods_json(phi, seq.values)
    if args.oracle:
        report["oracle_check"] = clock("oracle", lambda: _run_oracle(phi, seq.values))

    if need_operator:
        r_max, d_max = args.ansatz
        op = clock("pfop", lambda: operator_from_series(
            seq.values, r_max, d_max, args.verify_margin))
        rec = to_recurrence(op)
        sing = singular_points(op)
        inv = involution(op)
        report["operator"] = _operator_json(op)
        report["recurrence"] = rec.to_strings()
        report["symbol"] = [frac_str(c) for c in symbol(op).coeffs]
        report["singular_points"] = sing.to_json_dict()
        report["involution"] = inv.to_json_dict()
        if need_apery:
            max_terms = args.terms if args.terms is not None else 200
            result = clock("apery", lambda: apery_limit(
                rec, sing, precision_digits=args.digits, max_terms=max_terms,
                max_denominator=args.max_denominator))
            report["apery"] = result.to_json_dict(args.digits)
            if args.require_recognition and result.recognized is None:
                raise RecognitionAbsent(
                    "limit evaluated but not recognized against the basis")
    if args.timings:
        report["timings"] = {k: round(v, 6) for k, v in timings.items()}
    return report


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", default=True,
                        help="emit JSON (default; flag kept for symmetry)")
    parser.add_argument("--terms", type=int, default=None,
                        help="maximum recurrence terms for the limit "
                             "(default 200); for period-only output, the "
                             "number of period terms")
    parser.add_argument("--digits", type=int, default=50,
                        help="target precision in decimal digits (default 50)")
    parser.add_argument("--ansatz", type=_parse_ansatz, default=(4, 4),
                        metavar="RxD",
                        help="operator search box order x degree (default 4x4)")
    parser.add_argument("--max-denominator", type=int, default=10000,
                        help="recognition denominator bound (default 10000)")
    parser.add_argument("--discovery-terms", type=int, default=30,
                        help="period terms used for operator discovery (default 30)")
    parser.add_argument("--verify-margin", type=int, default=8,
                        help="held-out terms for operator verification (default 8)")
    parser.add_argument("--oracle", action="store_true",
                        help="re-check periods against the naive expansion")
    parser.add_argument("--require-recognition", action="store_true",
                        help="exit 6 if the limit is not recognized")
    parser.add_argument("--timings", action="store_true",
                        help="include per-stage wall-clock timings in the report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lgapery",
        description="Period sequences, Picard-Fuchs operators and Apery "
                    "constants of toric Landau-Ginzburg models.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", help="list the built-in superpotentials")

    p_run = sub.add_parser("run", help="full pipeline on a catalog name or polynomial")
    p_run.add_argument("input", help="catalog name (V12, V16, V18, R1) or polynomial text")
    p_run.add_argument("--periods-only", action="store_true",
                       help="stop after the period sequence")
    _add_common(p_run)

    p_periods = sub.add_parser("periods", help="period sequence only")
    p_periods.add_argument("input")
    _add_common(p_periods)

    p_pfop = sub.add_parser("pfop", help="discover the annihilating operator")
    p_pfop.add_argument("input")
    _add_common(p_pfop)

    p_sing = sub.add_parser("singular", help="symbol, singular points, involution")
    p_sing.add_argument("input")
    _add_common(p_sing)

    p_temp = sub.add_parser("tempered", help="Minkowski temperedness report")
    p_temp.add_argument("input")
    _add_common(p_temp)

    p_apery = sub.add_parser("apery", help="Apery limit with recognition")
    p_apery.add_argument("input")
    _add_common(p_apery)

    p_v16 = sub.add_parser("check-v16", help="membrane integral special value check")
    p_v16.add_argument("--digits", type=int, default=20)
    p_v16.add_argument("--max-denominator", type=int, default=10000)
    p_v16.add_argument("--corrupt-integrand", action="store_true",
                       help=argparse.SUPPRESS)
    return parser


def cmd_catalog() -> dict:
    catalog_mod.validate()
    return {
        "entries": [
            {
                "name": e.name,
                "phi": e.phi_text,
                "canonical": e.phi.to_text(),
                "expected_symbol": [frac_str(c) for c in e.expected_symbol.coeffs],
                "expected_M": frac_str(e.expected_M),
                "expected_basis": e.expected_basis,
            }
            for e in catalog_mod.entries()
        ]
    }


def cmd_check_v16(digits: int, max_denominator: int = 10000,
                  corrupt: bool = False) -> dict:
    value = v16_membrane_value(digits)
    if corrupt:
        value = value + Fraction(1, 1000)
    # Low-precision runs scale the recognition guard down with the request.
    guard = min(8, max(1, digits // 3))
    rec = recognize(value, max_denominator=max_denominator,
                    guard_digits=guard)
    expected = zeta3(digits + 4) * 7
    residual = abs(value - expected)
    passed = (rec is not None and rec.basis == "zeta3"
              and rec.coefficient == 7)
    return {
        "digits": digits,
        "value": value.to_decimal(digits),
        "recognized": None if rec is None else {
            "coefficient": frac_str(rec.coefficient),
            "basis": rec.basis,
        },
        "residual_vs_7zeta3": residual.to_decimal(3),
        "passed": passed,
    }


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    stage = "setup"
    try:
        if args.command == "catalog":
            _emit(cmd_catalog())
            return EXIT_OK
        if args.command == "check-v16":
            stage = "quadrature"
            report = cmd_check_v16(args.digits, args.max_denominator,
                                   corrupt=args.corrupt_integrand)
            _emit(report)
            return EXIT_OK if report["passed"] else EXIT_RECOGNITION
        stage = "parse"
        name, phi = _resolve_input(args.input)
        if args.command == "tempered":
            stage = "geometry"
            _emit(temperedness_check(phi).to_json_dict())
            return EXIT_OK
        if args.command == "periods":
            stage = "periods"
            n_terms = args.terms if args.terms is not None else args.discovery_terms
            seq = period_sequence(phi, n_terms)
            out = _periods_json(phi, seq.values)
            if args.oracle:
                out["oracle_check"] = _run_oracle(phi, seq.values)
            _emit(out)
            return EXIT_OK
        stage = "pipeline"
        if args.command == "run":
            need_operator = not args.periods_only
            report = _pipeline(phi, name, args, need_operator=need_operator,
                               need_apery=need_operator)
            _emit(report)
            return EXIT_OK
        if args.command == "pfop":
            report = _pipeline(phi, name, args, need_operator=True,
                               need_apery=False)
            _emit({k: report[k] for k in
                   ("input", "operator", "recurrence", "symbol")})
            return EXIT_OK
        if args.command == "singular":
            report = _pipeline(phi, name, args, need_operator=True,
                               need_apery=False)
            _emit({k: report[k] for k in
                   ("input", "symbol", "singular_points", "involution")})
            return EXIT_OK
        if args.command == "apery":
            report = _pipeline(phi, name, args, need_operator=True,
                               need_apery=True)
            _emit({k: report[k] for k in ("input", "apery")})
            return EXIT_OK
        parser.error(f"unknown command {args.command}")
    except RecognitionAbsent as exc:
        return _fail("recognition", exc, EXIT_RECOGNITION)
    except OracleMismatch as exc:
        return _fail("oracle", exc, 1)
    except Exception as exc:  # mapped by type below
        for exc_type, code, label in _ERROR_CODES:
            if isinstance(exc, exc_type):
                return _fail(label, exc, code)
        raise
    return EXIT_OK


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
