"""Asymptotic limits and convergence tables for the minimal-entry problem.

For fixed socle degree e and degree i, the minimal degree-i entry over all
codimension-r symmetric h-vectors grows like a constant times r^((e-i)/(e-1)).
This module evaluates that constant, and sandwiches the normalized values
between the iterated lower bound and the constructed upper envelope.
"""
from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .binomials import macaulay_expand, shift
from .bounds import envelope_lower, mid_lower
from .construct import gorenstein_candidate
from .encoding import dumps

WORKING_PRECISION = 60

RATIO_CSV_HEADER = ("r", "i", "g_value", "h_value", "g_ratio", "h_ratio", "limit", "gap_g", "gap_h")


def limit_value(e: int, i: int) -> Decimal:
    """The limit of (minimal degree-i entry) / r^((e-i)/(e-1)) as r grows.

    Equals ((e-1)!)^((e-i)/(e-1)) / (e-i)! below the middle degree, and twice
    the same expression at the middle (even e only).
    """
    if e < 3:
        raise ValueError("socle degree must be >= 3")
    if i < 1 or i > e // 2:
        raise ValueError("degree must satisfy 1 <= i <= floor(e/2); use symmetry above the middle")
    if 2 * i == e and e % 2:
        raise ValueError("middle degree requires even socle degree")
    with localcontext() as ctx:
        ctx.prec = WORKING_PRECISION
        base = Decimal(math.factorial(e - 1))
        exponent = Decimal(e - i) / Decimal(e - 1)
        value = base**exponent / Decimal(math.factorial(e - i))
        if 2 * i == e:
            value *= 2
        return value


@dataclass(frozen=True)
class RatioRow:
    """One sandwich sample: bounds at codimension r, normalized by r^exponent."""

    r: int
    i: int
    g_value: int
    h_value: int
    closed_form: int
    exponent: Fraction
    g_ratio: Decimal
    h_ratio: Decimal
    limit: Decimal
    gap_g: Decimal
    gap_h: Decimal

    @property
    def sandwiched(self) -> bool:
        return self.g_value <= self.h_value


def _make_row(e: int, i: int, r: int) -> RatioRow:
    if r < 2:
        raise ValueError("r must be >= 2")
    if e % 2 == 0 and i == e // 2:
        g_value = mid_lower(r, e)
    else:
        g_value = envelope_lower(r, e).lower[i]
    closed_form = shift(macaulay_expand(r, e - 1), -(i - 1), -(i - 1))
    h_value = gorenstein_candidate(r, e).hvector[i]
    exponent = Fraction(e - i, e - 1)
    limit = limit_value(e, i)
    with localcontext() as ctx:
        ctx.prec = WORKING_PRECISION
        norm = Decimal(r) ** (Decimal(exponent.numerator) / Decimal(exponent.denominator))
        g_ratio = Decimal(g_value) / norm
        h_ratio = Decimal(h_value) / norm
        gap_g = abs(g_ratio - limit) / limit
        gap_h = abs(h_ratio - limit) / limit
    return RatioRow(
        r=r,
        i=i,
        g_value=g_value,
        h_value=h_value,
        closed_form=closed_form,
        exponent=exponent,
        g_ratio=g_ratio,
        h_ratio=h_ratio,
        limit=limit,
        gap_g=gap_g,
        gap_h=gap_h,
    )


def ratio_table(e: int, i: int, r_values, jobs: int = 1) -> list[RatioRow]:
    """Sandwich rows for each requested codimension, in input order."""
    rs = list(r_values)
    if jobs > 1 and len(rs) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda r: _make_row(e, i, r), rs))
    return [_make_row(e, i, r) for r in rs]


def kleinschmidt_consistency(e: int) -> bool:
    """The middle-degree exponent (e - floor(e/2))/(e-1) equals the classical
    logarithmic exponent floor((e+1)/2)/(e-1)."""
    if e < 3:
        raise ValueError("socle degree must be >= 3")
    return Fraction(e - e // 2, e - 1) == Fraction((e + 1) // 2, e - 1)


def geometric_samples(r_max: int, points_per_decade: int, start: int = 100) -> list[int]:
    """Geometrically spaced integers from ``start`` up to and including r_max."""
    if r_max < start:
        raise ValueError(f"r_max must be >= {start}")
    if points_per_decade < 1:
        raise ValueError("points_per_decade must be >= 1")
    samples = []
    k = 0
    while True:
        r = round(start * 10 ** (k / points_per_decade))
        if r > r_max:
            break
        if not samples or r > samples[-1]:
            samples.append(r)
        k += 1
    if samples[-1] != r_max:
        samples.append(r_max)
    return samples


@dataclass(frozen=True)
class ConvergenceReport:
    """Sandwich table plus per-decade trend summary."""

    e: int
    i: int
    rows: tuple[RatioRow, ...]
    errors: tuple[str, ...]
    first_decade_mean_gap_g: Decimal
    first_decade_mean_gap_h: Decimal
    last_decade_mean_gap_g: Decimal
    last_decade_mean_gap_h: Decimal

    @property
    def final_gap_g(self) -> Decimal:
        return self.rows[-1].gap_g

    @property
    def final_gap_h(self) -> Decimal:
        return self.rows[-1].gap_h

    @property
    def trend_ok_g(self) -> bool:
        return self.last_decade_mean_gap_g < self.first_decade_mean_gap_g

    @property
    def trend_ok_h(self) -> bool:
        return self.last_decade_mean_gap_h < self.first_decade_mean_gap_h


def convergence_report(e: int, i: int, r_max: int, points_per_decade: int, jobs: int = 1) -> ConvergenceReport:
    """Sample geometrically up to r_max and summarize how the sandwich closes.

    Rows where the lower value exceeds the upper one are collected as errors;
    the trend compares mean relative gaps in the first and last decades.
    """
    samples = geometric_samples(r_max, points_per_decade)
    rows = ratio_table(e, i, samples, jobs=jobs)
    errors = tuple(
        f"r={row.r}: lower value {row.g_value} exceeds upper value {row.h_value}"
        for row in rows
        if not row.sandwiched
    )
    decades = sorted({len(str(row.r)) - 1 for row in rows})
    first = [row for row in rows if len(str(row.r)) - 1 == decades[0]]
    last = [row for row in rows if len(str(row.r)) - 1 == decades[-1]]

    def mean(values: list[Decimal]) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = WORKING_PRECISION
            return sum(values, Decimal(0)) / len(values)

    return ConvergenceReport(
        e=e,
        i=i,
        rows=tuple(rows),
        errors=errors,
        first_decade_mean_gap_g=mean([row.gap_g for row in first]),
        first_decade_mean_gap_h=mean([row.gap_h for row in first]),
        last_decade_mean_gap_g=mean([row.gap_g for row in last]),
        last_decade_mean_gap_h=mean([row.gap_h for row in last]),
    )


def rows_to_csv(rows) -> str:
    """Render rows under the fixed header r,i,g_value,h_value,g_ratio,h_ratio,limit,gap_g,gap_h."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(RATIO_CSV_HEADER)
    for row in rows:
        writer.writerow([
            row.r, row.i, row.g_value, row.h_value,
            str(row.g_ratio), str(row.h_ratio), str(row.limit),
            str(row.gap_g), str(row.gap_h),
        ])
    return buffer.getvalue()


def rows_to_jsonl(rows) -> str:
    """One JSON object per row, including the closed-form column."""
    lines = []
    for row in rows:
        lines.append(dumps({
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
        }))
    return "\n".join(lines) + "\n"
