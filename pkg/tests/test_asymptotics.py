import json
from decimal import Decimal
from fractions import Fraction

import mpmath
import pytest

from ghk.asymptotics import (
    RATIO_CSV_HEADER,
    convergence_report,
    geometric_samples,
    kleinschmidt_consistency,
    limit_value,
    ratio_table,
    rows_to_csv,
    rows_to_jsonl,
)


def _mp_limit(e: int, i: int) -> mpmath.mpf:
    with mpmath.workdps(45):
        value = mpmath.power(mpmath.factorial(e - 1), mpmath.mpf(e - i) / (e - 1))
        value /= mpmath.factorial(e - i)
        if 2 * i == e:
            value *= 2
        return value


def test_limit_stanley_constant():
    value = limit_value(4, 2)
    with mpmath.workdps(45):
        expected = mpmath.power(6, mpmath.mpf(2) / 3)
        assert abs(mpmath.mpf(str(value)) - expected) < mpmath.mpf(10) ** -35


def test_limit_degree_one_is_one():
    for e in (3, 5, 8, 17):
        assert limit_value(e, 1) == 1


def test_limit_cross_checked_to_thirty_digits():
    for e, i in ((5, 2), (6, 2), (6, 3), (8, 2), (8, 4), (9, 4), (12, 6)):
        ours = limit_value(e, i)
        with mpmath.workdps(45):
            assert abs(mpmath.mpf(str(ours)) - _mp_limit(e, i)) < mpmath.mpf(10) ** -30


def test_limit_rejections():
    with pytest.raises(ValueError):
        limit_value(7, 4)  # beyond the middle
    with pytest.raises(ValueError):
        limit_value(2, 1)


def test_middle_degree_doubles_the_generic_formula():
    for e in (4, 6, 8, 10, 14):
        doubled = limit_value(e, e // 2)
        with mpmath.workdps(45):
            single = _mp_limit(e, e // 2) / 2
            assert abs(mpmath.mpf(str(doubled)) / 2 - single) < mpmath.mpf(10) ** -30


def test_ratio_table_codim_125():
    (row,) = ratio_table(8, 2, [125])
    assert row.g_value == 95
    assert row.closed_form == 89
    assert row.h_value == 95
    assert row.exponent == Fraction(6, 7)
    assert row.g_ratio <= row.h_ratio
    assert row.sandwiched


def test_ratio_table_degree_one_is_exact():
    for e in (5, 8):
        rows = ratio_table(e, 1, [2, 17, 1000])
        for row in rows:
            assert row.g_value == row.h_value == row.r
            assert row.g_ratio == row.h_ratio == Decimal(1)
            assert row.gap_g == row.gap_h == Decimal(0)


def test_ratio_table_jobs_matches_serial():
    serial = ratio_table(6, 3, [10, 100, 1000, 10000])
    parallel = ratio_table(6, 3, [10, 100, 1000, 10000], jobs=4)
    assert serial == parallel


def test_kleinschmidt_identity():
    for e in range(3, 1001):
        assert kleinschmidt_consistency(e)


def test_geometric_samples():
    samples = geometric_samples(10**4, 2)
    assert samples[0] == 100
    assert samples[-1] == 10**4
    assert all(a < b for a, b in zip(samples, samples[1:]))
    with pytest.raises(ValueError):
        geometric_samples(50, 2)


def test_convergence_report_stanley_case():
    report = convergence_report(4, 2, 10**6, 3)
    assert not report.errors
    assert all(row.sandwiched for row in report.rows)
    assert report.trend_ok_g and report.trend_ok_h
    assert report.final_gap_g < Decimal("0.05")
    assert report.final_gap_h < Decimal("0.05")


def test_convergence_report_degree_one_gaps_vanish():
    report = convergence_report(6, 1, 10**4, 2)
    assert report.final_gap_g == report.final_gap_h == Decimal(0)
    for row in report.rows:
        assert row.gap_g == row.gap_h == Decimal(0)


def test_csv_writer_pins_header():
    rows = ratio_table(8, 2, [125, 1000])
    text = rows_to_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == ",".join(RATIO_CSV_HEADER)
    assert len(lines) == 3
    first = lines[1].split(",")
    assert first[0] == "125" and first[2] == "95"


def test_jsonl_writer_round_trips():
    rows = ratio_table(8, 2, [125])
    payloads = [json.loads(line) for line in rows_to_jsonl(rows).strip().split("\n")]
    assert payloads[0]["g_value"] == 95
    assert payloads[0]["closed_form"] == 89
    assert payloads[0]["exponent"] == "6/7"
