"""Command-line client for the toolkit.

Every subcommand is a thin adapter over :mod:`ghk.runner`: it parses argv,
invokes the corresponding operation, and prints exactly one result object on
stdout (JSON by default, CSV on request).  Diagnostics and warnings go to
stderr.  Exit status: 0 on success, 2 on usage or precondition errors, 1 on
internal errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import runner
from .asymptotics import RATIO_CSV_HEADER
from .encoding import dumps


def _integer(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def _vector(text: str) -> list[int]:
    """Comma-separated integers, or @path pointing at a file of them."""
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text()
        except OSError as exc:
            raise argparse.ArgumentTypeError(f"cannot read {text[1:]!r}: {exc}")
    values = []
    for token in text.replace(",", " ").split():
        try:
            values.append(int(token, 10))
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {token!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty h-vector")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghk",
        description="Exact bounds, constructions, and oracles for Gorenstein h-vectors.",
    )
    parser.add_argument("--format", choices=("json", "csv"), default="json",
                        help="output format (default: json)")
    parser.add_argument("--seed", type=_integer, default=0,
                        help="seed for randomized oracle helpers (default: 0)")
    parser.add_argument("--jobs", type=_integer, default=None,
                        help="worker count for table generation (default: GHK_JOBS or cpu count)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="Macaulay expansion of N at a base index")
    p.add_argument("n", type=_integer)
    p.add_argument("--base", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_expand(a.n, a.base))

    p = sub.add_parser("shift", help="shifted-expansion value of N")
    p.add_argument("n", type=_integer)
    p.add_argument("--base", type=_integer, required=True)
    p.add_argument("--a", type=_integer, required=True, help="shift added to bottom indices")
    p.add_argument("--b", type=_integer, required=True, help="shift added to top indices")
    p.set_defaults(handler=lambda a: runner.run_shift(a.n, a.base, a.a, a.b))

    p = sub.add_parser("growth", help="maximal Hilbert-function growth from degree D")
    p.add_argument("n", type=_integer)
    p.add_argument("--deg", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_growth(a.n, a.deg))

    p = sub.add_parser("green", help="general linear restriction bound in degree D")
    p.add_argument("n", type=_integer)
    p.add_argument("--deg", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_green(a.n, a.deg))

    p = sub.add_parser("bg-min", help="least s whose growth from degree D-1 reaches A")
    p.add_argument("a_value", metavar="A", type=_integer)
    p.add_argument("--deg", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_bg_min(a.a_value, a.deg))

    p = sub.add_parser("bound", help="step lower bound for the next entry of a Gorenstein h-vector")
    p.add_argument("h", type=_integer)
    p.add_argument("--e", type=_integer, required=True)
    p.add_argument("--i", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_bound(a.h, a.e, a.i))

    p = sub.add_parser("envelope", help="iterated lower bounds up to the middle degree")
    p.add_argument("r", type=_integer)
    p.add_argument("--e", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_envelope(a.r, a.e))

    p = sub.add_parser("mid", help="closed-form middle-degree lower bound (even e)")
    p.add_argument("r", type=_integer)
    p.add_argument("--e", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_mid(a.r, a.e))

    p = sub.add_parser("threshold", help="unimodality threshold at degree i")
    p.add_argument("--e", type=_integer, required=True)
    p.add_argument("--i", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_threshold(a.e, a.i))

    p = sub.add_parser("e0", help="socle-degree bound forcing unimodality up to degree i+1")
    p.add_argument("--r", type=_integer, required=True)
    p.add_argument("--i", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_e0(a.r, a.i))

    p = sub.add_parser("codim3-cert", help="verify the codimension-3 unimodality inequality")
    p.add_argument("--emax", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_codim3_cert(a.emax))

    p = sub.add_parser("decompose", help="codimension decomposition at socle degree e")
    p.add_argument("r", type=_integer)
    p.add_argument("--e", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_decompose(a.r, a.e))

    p = sub.add_parser("construct", help="construct a Gorenstein h-vector candidate")
    p.add_argument("r", type=_integer)
    p.add_argument("--e", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_construct(a.r, a.e))

    p = sub.add_parser("check-oseq", help="check the maximal-growth condition")
    p.add_argument("h", type=_vector, help="comma-separated entries, or @file")
    p.set_defaults(handler=lambda a: runner.run_check_oseq(a.h))

    p = sub.add_parser("check-si", help="check symmetry plus first-difference growth")
    p.add_argument("h", type=_vector, help="comma-separated entries, or @file")
    p.set_defaults(handler=lambda a: runner.run_check_si(a.h))

    p = sub.add_parser("lex-growth", help="lex-ideal growth count (oracle for 'growth')")
    p.add_argument("h", type=_integer)
    p.add_argument("--deg", type=_integer, required=True)
    p.add_argument("--vars", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_lex_growth(a.h, a.deg, a.vars))

    p = sub.add_parser("lex-level", help="socle concentration of the lex ideal with Hilbert function h")
    p.add_argument("h", type=_vector, help="comma-separated entries, or @file")
    p.add_argument("--vars", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_lex_level(a.h, a.vars))

    p = sub.add_parser("catalecticant", help="Hilbert function of the apolar algebra of a form")
    p.add_argument("--form", required=True, help="path to a JSON file {num_vars, degree, terms}")
    p.add_argument("--prime", type=_integer, default=None,
                   help=f"field characteristic (default: GHK_PRIME or {runner.DEFAULT_PRIME})")
    p.set_defaults(handler=_run_catalecticant)

    p = sub.add_parser("compressed", help="entrywise-maximal symmetric h-vector")
    p.add_argument("--r", type=_integer, required=True)
    p.add_argument("--e", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_compressed(a.r, a.e))

    p = sub.add_parser("limit", help="asymptotic constant for the minimal degree-i entry")
    p.add_argument("--e", type=_integer, required=True)
    p.add_argument("--i", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_limit(a.e, a.i))

    p = sub.add_parser("table", help="convergence table sandwiching the minimal entry")
    p.add_argument("--e", type=_integer, required=True)
    p.add_argument("--i", type=_integer, required=True)
    p.add_argument("--rmax", type=_integer, required=True)
    p.add_argument("--per-decade", type=_integer, default=4)
    p.set_defaults(handler=lambda a: runner.run_table(a.e, a.i, a.rmax, a.per_decade, jobs=a.jobs))

    p = sub.add_parser("kleinschmidt", help="middle-degree exponent identity check")
    p.add_argument("--emax", type=_integer, required=True)
    p.set_defaults(handler=lambda a: runner.run_kleinschmidt(a.emax))

    return parser


def _run_catalecticant(args) -> runner.CommandResult:
    try:
        form = json.loads(Path(args.form).read_text())
    except OSError as exc:
        raise ValueError(f"cannot read form file: {exc}")
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed form file: {exc}")
    return runner.run_catalecticant(form, args.prime)


def _csv_cell(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _emit_csv(result: runner.CommandResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if result.command == "table":
        writer.writerow(RATIO_CSV_HEADER)
        for row in result.outputs["rows"]:
            writer.writerow([_csv_cell(row[key]) for key in RATIO_CSV_HEADER])
    else:
        keys = list(result.outputs)
        writer.writerow(keys)
        writer.writerow([_csv_cell(result.outputs[key]) for key in keys])
    return buffer.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if args.format == "csv":
        sys.stdout.write(_emit_csv(result))
    else:
        print(dumps(result.to_dict()))
    return 0


if __name__ == "__main__":
    sys.exit(main())
