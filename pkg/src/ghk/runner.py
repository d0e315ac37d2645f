"""Shared command layer: one function per operation, returning a uniform
result envelope.  The CLI and the HTTP service are both thin clients of this
module, so their payloads agree byte for byte."""
from __future__ import annotations

import os
from dataclasses import dataclass, field

from . import asymptotics, bounds, construct, oracle
from .binomials import (
    bg_inverse_min,
    green_restriction,
    macaulay_expand,
    macaulay_growth,
    shift,
)
from .encoding import encode_value

DEFAULT_PRIME = oracle.DEFAULT_PRIME


def default_prime() -> int:
    return int(os.environ.get("GHK_PRIME", DEFAULT_PRIME))


def default_jobs() -> int:
    env = os.environ.get("GHK_JOBS")
    if env is not None:
        return int(env)
    return os.cpu_count() or 1


@dataclass(frozen=True)
class CommandResult:
    """Envelope emitted once per invocation; all values are JSON-ready."""

    command: str
    inputs: dict
    outputs: dict
    warnings: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "warnings": list(self.warnings),
        }


def _result(command: str, inputs: dict, outputs: dict, warnings: list | None = None) -> CommandResult:
    return CommandResult(
        command=command,
        inputs=encode_value(inputs),
        outputs=encode_value(outputs),
        warnings=list(warnings or []),
    )


def run_expand(n: int, base: int) -> CommandResult:
    expansion = macaulay_expand(n, base)
    return _result(
        "expand",
        {"n": n, "base": base},
        {"terms": [list(t) for t in expansion.terms], "value": expansion.value},
    )


def run_shift(n: int, base: int, a: int, b: int) -> CommandResult:
    value = shift(macaulay_expand(n, base), a, b)
    return _result("shift", {"n": n, "base": base, "a": a, "b": b}, {"result": value})


def run_growth(n: int, deg: int) -> CommandResult:
    return _result("growth", {"n": n, "deg": deg}, {"result": macaulay_growth(n, deg)})


def run_green(n: int, deg: int) -> CommandResult:
    return _result("green", {"n": n, "deg": deg}, {"result": green_restriction(n, deg)})


def run_bg_min(a: int, deg: int) -> CommandResult:
    return _result("bg-min", {"a": a, "deg": deg}, {"result": bg_inverse_min(a, deg)})


def run_bound(h: int, e: int, i: int) -> CommandResult:
    return _result("bound", {"h": h, "e": e, "i": i}, {"result": bounds.step_lower(h, e, i)})


def run_envelope(r: int, e: int) -> CommandResult:
    env = bounds.envelope_lower(r, e)
    return _result(
        "envelope",
        {"r": r, "e": e},
        {"lower": list(env.lower), "closed_form": list(env.closed_form), "g1": list(env.g1)},
    )


def run_mid(r: int, e: int) -> CommandResult:
    return _result("mid", {"r": r, "e": e}, {"result": bounds.mid_lower(r, e)})


def run_threshold(e: int, i: int) -> CommandResult:
    return _result("threshold", {"e": e, "i": i}, {"result": bounds.unimodality_threshold(e, i)})


def run_e0(r: int, i: int) -> CommandResult:
    value = bounds.e0_bound(r, i)
    return _result(
        "e0",
        {"r": r, "i": i},
        {"result": value, "numerator": value.numerator, "denominator": value.denominator},
    )


def run_codim3_cert(e_max: int) -> CommandResult:
    cert = bounds.codim3_unimodality_certificate(e_max)
    return _result(
        "codim3-cert",
        {"emax": e_max},
        {
            "all_pass": cert.all_pass,
            "rows": [{"e": e, "rhs": rhs, "pass": ok} for e, rhs, ok in cert.rows],
        },
    )


def run_decompose(r: int, e: int) -> CommandResult:
    dec = construct.decompose_r(r, e)
    return _result(
        "decompose",
        {"r": r, "e": e},
        {
            "m": dec.m,
            "binomial_term": dec.binomial_term,
            "a": list(dec.a),
            "remainder": dec.remainder,
            "exact_case": dec.exact_case,
        },
    )


def run_construct(r: int, e: int) -> CommandResult:
    if e < 3:
        raise ValueError("socle degree must be >= 3")
    warnings = []
    if r == 1:
        # Codimension 1: the all-ones vector is the only possibility.
        return _result(
            "construct",
            {"r": r, "e": e},
            {"hvector": [1] * (e + 1), "exact_case": True, "plus_one_applied": False,
             "m": 1, "level_part": [1] * e, "trivial": True},
        )
    candidate = construct.gorenstein_candidate(r, e)
    if e <= 4:
        warnings.append("socle degree e <= 4: construction formulas applied uniformly below the regime they were designed for")
    return _result(
        "construct",
        {"r": r, "e": e},
        {
            "hvector": list(candidate.hvector.entries),
            "exact_case": candidate.exact_case,
            "plus_one_applied": candidate.plus_one_applied,
            "m": candidate.m,
            "level_part": list(candidate.level_part),
            "trivial": False,
        },
        warnings,
    )


def run_check_oseq(entries: list[int]) -> CommandResult:
    return _result("check-oseq", {"h": entries}, {"ok": oracle.osequence_check(entries)})


def run_check_si(entries: list[int]) -> CommandResult:
    return _result("check-si", {"h": entries}, {"ok": oracle.si_sequence_check(entries)})


def run_lex_growth(h: int, deg: int, num_vars: int) -> CommandResult:
    return _result(
        "lex-growth",
        {"h": h, "deg": deg, "vars": num_vars},
        {"result": oracle.lex_growth(h, deg, num_vars)},
    )


def run_lex_level(entries: list[int], num_vars: int) -> CommandResult:
    return _result(
        "lex-level",
        {"h": entries, "vars": num_vars},
        {"ok": oracle.lex_level_check(entries, num_vars)},
    )


def run_catalecticant(form: dict, prime: int | None = None) -> CommandResult:
    p = default_prime() if prime is None else prime
    dual = oracle.DualForm.from_json_dict(form)
    hv = oracle.catalecticant_hilbert(dual, p)
    return _result(
        "catalecticant",
        {"form": form, "prime": p},
        {"hvector": list(hv.entries)},
    )


def run_compressed(r: int, e: int) -> CommandResult:
    hv = oracle.compressed_hvector(r, e)
    return _result("compressed", {"r": r, "e": e}, {"hvector": list(hv.entries)})


def run_limit(e: int, i: int) -> CommandResult:
    return _result("limit", {"e": e, "i": i}, {"result": asymptotics.limit_value(e, i)})


def _row_payload(row: asymptotics.RatioRow) -> dict:
    return {
        "r": row.r,
        "i": row.i,
        "g_value": row.g_value,
        "h_value": row.h_value,
        "closed_form": row.closed_form,
        "exponent": row.exponent,
        "g_ratio": row.g_ratio,
        "h_ratio": row.h_ratio,
        "limit": row.limit,
        "gap_g": row.gap_g,
        "gap_h": row.gap_h,
    }


def run_table(e: int, i: int, r_max: int, per_decade: int, jobs: int | None = None) -> CommandResult:
    report = asymptotics.convergence_report(
        e, i, r_max, per_decade, jobs=default_jobs() if jobs is None else jobs
    )
    return _result(
        "table",
        {"e": e, "i": i, "rmax": r_max, "per_decade": per_decade},
        {
            "rows": [_row_payload(row) for row in report.rows],
            "errors": list(report.errors),
            "first_decade_mean_gap_g": report.first_decade_mean_gap_g,
            "first_decade_mean_gap_h": report.first_decade_mean_gap_h,
            "last_decade_mean_gap_g": report.last_decade_mean_gap_g,
            "last_decade_mean_gap_h": report.last_decade_mean_gap_h,
            "trend_ok_g": report.trend_ok_g,
            "trend_ok_h": report.trend_ok_h,
            "final_gap_g": report.final_gap_g,
            "final_gap_h": report.final_gap_h,
        },
    )


def run_kleinschmidt(e_max: int) -> CommandResult:
    if e_max < 3:
        raise ValueError("emax must be >= 3")
    failures = [e for e in range(3, e_max + 1) if not asymptotics.kleinschmidt_consistency(e)]
    return _result(
        "kleinschmidt",
        {"emax": e_max},
        {"all_pass": not failures, "failures": failures},
    )
