"""Acceptance suite.

One test per criterion, each at its stated tolerance, printing a single
pass/fail line (run with ``pytest tests/test_acceptance.py -v -s``).  Values
are exact integers unless a tolerance is named explicitly.
"""
import random
from contextlib import contextmanager
from decimal import Decimal

from ghk.asymptotics import convergence_report, kleinschmidt_consistency, limit_value
from ghk.binomials import bg_inverse_min, binomial, macaulay_expand, macaulay_growth, shift
from ghk.bounds import step_lower, unimodality_threshold
from ghk.construct import gorenstein_candidate, trivial_extension
from ghk.oracle import (
    catalecticant_hilbert,
    compressed_hvector,
    lex_growth,
    lex_socle_monomials,
    random_form,
    trivial_extension_form,
    DualForm,
)
from ghk.bounds import codim3_unimodality_certificate, e0_bound
from fractions import Fraction

PRIME = 32003
BERNSTEIN_IARROBINO = (1, 5, 12, 22, 35, 51, 70, 91, 90, 91, 70, 51, 35, 22, 12, 5, 1)


@contextmanager
def criterion(label: str, description: str):
    try:
        yield
    except BaseException:
        print(f"criterion {label:>3} FAIL  {description}")
        raise
    print(f"criterion {label:>3} PASS  {description}")


def test_01_step_chain_and_candidate_codim125_socle8():
    with criterion("1", "codimension-125 socle-8 chain and constructed candidate"):
        assert step_lower(125, 8, 1) == 95
        assert step_lower(95, 8, 2) == 77
        assert step_lower(77, 8, 3) == 70
        cand = gorenstein_candidate(125, 8)
        assert cand.hvector.entries == (1, 125, 95, 77, 71, 77, 95, 125, 1)


def test_02a_nonunimodal_codim5_vector_step_bounds():
    with criterion("2a", "codim-5 non-unimodal vector: bounds respected, degree-8 entry optimal"):
        h = BERNSTEIN_IARROBINO
        assert step_lower(91, 16, 7) == 90
        for i in range(1, 8):
            assert step_lower(h[i], 16, i) <= h[i + 1]


def test_02b_nonunimodal_codim5_vector_nondecreasing_through_degree_six():
    with criterion("2b", "codim-5 non-unimodal vector: step >= entry for degrees 1..6"):
        h = BERNSTEIN_IARROBINO
        for i in range(1, 7):
            bound = step_lower(h[i], 16, i)
            assert bound >= h[i], (
                f"degree {i}: step bound {bound} < entry {h[i]} "
                f"(threshold {unimodality_threshold(16, i)})"
            )


def _sweep_candidates():
    for e in range(6, 15):
        for m in range(1, e - 1):
            r = binomial(m + e - 3, e - 1) + m
            if r == 1:
                yield e, m, r, (1,) * (e + 1)  # codimension 1: the all-ones vector
            else:
                yield e, m, r, gorenstein_candidate(r, e).hvector.entries


def test_03a_sharpness_sweep_degree_two():
    with criterion("3a", "constructed candidates attain the degree-2 bound, 6 <= e <= 14"):
        for e, m, r, hv in _sweep_candidates():
            assert step_lower(hv[1], e, 1) == hv[2], (e, m, r)


def test_03b_sharpness_sweep_degree_three():
    with criterion("3b", "constructed candidates attain the degree-3 bound, 6 <= e <= 14"):
        failures = []
        for e, m, r, hv in _sweep_candidates():
            bound = step_lower(hv[2], e, 2)
            if bound != hv[3]:
                failures.append((e, m, r, bound, hv[3]))
        assert not failures, (
            "degree-3 bound not attained at (e, m, r, bound, H_3): " + repr(failures)
        )


def test_04_codim4_socle10_step_fixture():
    with criterion("4", "step bound for (1,4,10,20,33,...) at socle degree 10 equals 30"):
        assert step_lower(33, 10, 4) == 30


def test_05_threshold_guarantee_exhaustive():
    with criterion("5", "entries below the threshold never step down, e <= 30, zero violations"):
        violations = 0
        for e in range(4, 31):
            i = 1
            while 2 * i + 2 <= e:
                for h in range(1, unimodality_threshold(e, i)):
                    if step_lower(h, e, i) < h:
                        violations += 1
                i += 1
        assert violations == 0


def test_06_codim3_certificate():
    with criterion("6", "codimension-3 unimodality inequality holds for 4 <= e <= 200"):
        cert = codim3_unimodality_certificate(200)
        assert cert.all_pass
        assert all(ok for _, _, ok in cert.rows)


def test_07_codim4_socle_bound_identity():
    with criterion("7", "codimension-4 socle bound equals (i^2 + 12i + 2)/6 for i <= 50"):
        for i in range(1, 51):
            assert e0_bound(4, i) == Fraction(i * i + 12 * i + 2, 6)


def test_08_inverse_growth_suites():
    with criterion("8", "500 seeded minimality cases and 500 iteration-identity cases"):
        rng = random.Random(0)
        for _ in range(500):
            A = rng.randrange(1, 10**6 + 1)
            d = rng.randrange(2, 13)
            s = bg_inverse_min(A, d)
            assert A <= macaulay_growth(s, d - 1)
            assert s == 1 or A > macaulay_growth(s - 1, d - 1)
        for _ in range(500):
            A = rng.randrange(1, 10**6 + 1)
            d = rng.randrange(3, 13)
            i = rng.randrange(0, d - 1)
            value = A
            for k in range(i + 1):
                value = bg_inverse_min(value, d - k)
            assert value == shift(macaulay_expand(A, d), -(i + 1), -(i + 1))


def test_09_lex_oracle_equivalence():
    with criterion("9", "lex-ideal counting equals the growth formula, d <= 3, h <= 60"):
        for d in (1, 2, 3):
            for h in range(1, 61):
                n = 1
                while binomial(n + d - 1, d) < h:
                    n += 1
                for extra in (0, 1, 2):
                    assert lex_growth(h, d, n + extra) == macaulay_growth(h, d), (d, h, n + extra)


def test_10_compressed_oracle_rates():
    with criterion("10", "random apolar algebras are compressed in >= 95% of draws, never above"):
        rng = random.Random(0)
        total = equal = 0
        for r in (2, 3, 4):
            for e in (4, 5, 6):
                expected = compressed_hvector(r, e).entries
                for _ in range(20):
                    hv = catalecticant_hilbert(random_form(r, e, PRIME, rng), PRIME).entries
                    assert all(a <= b for a, b in zip(hv, expected)), (r, e, hv)
                    total += 1
                    equal += hv == expected
        assert equal >= 0.95 * total, f"{equal}/{total}"


def test_11_tiny_realizations():
    with criterion("11", "linked-monomial forms realize the predicted Hilbert functions"):
        level = gorenstein_candidate(4, 8).level_part
        assert level == (1, 2, 2, 2, 2, 2, 2, 2)
        form = trivial_extension_form(lex_socle_monomials(level, 2))
        assert catalecticant_hilbert(form, PRIME).entries == (1, 4, 4, 4, 4, 4, 4, 4, 1)
        small = DualForm(num_vars=4, degree=4, terms=(((1, 2, 1, 0), 1), ((0, 3, 0, 1), 1)))
        assert catalecticant_hilbert(small, PRIME).entries == (1, 4, 4, 4, 1)


def test_12_stanley_constant_sandwich():
    with criterion("12", "socle-4 middle ratios within 10% of 6^(2/3) at r = 10^9"):
        limit = limit_value(4, 2)
        assert str(limit).startswith("3.3019272488946266838")
        report = convergence_report(4, 2, 10**9, 4)
        assert not report.errors
        for row in report.rows:
            assert row.g_ratio <= row.h_ratio
        assert report.final_gap_g < Decimal("0.10")
        assert report.final_gap_h < Decimal("0.10")
        assert report.trend_ok_g and report.trend_ok_h


def test_13_general_limit_trends():
    with criterion("13", "sandwich gaps below 25% with decreasing trend; factor 2 at the middle"):
        for e, i in ((5, 2), (6, 2), (6, 3), (8, 2), (8, 4)):
            report = convergence_report(e, i, 10**9, 4)
            assert not report.errors, (e, i)
            assert report.final_gap_g < Decimal("0.25"), (e, i, report.final_gap_g)
            assert report.final_gap_h < Decimal("0.25"), (e, i, report.final_gap_h)
            assert report.trend_ok_g and report.trend_ok_h, (e, i)
            if 2 * i == e:
                # the middle-degree limit doubles the sub-middle formula, and the
                # data sits nearer the doubled value than the single one
                single = limit_value(e, i) / 2
                final = report.rows[-1].h_ratio
                assert abs(final - 2 * single) < abs(final - single), (e, i)


def test_14_middle_exponent_identity():
    with criterion("14", "middle-degree normalization exponent identity for e <= 1000"):
        for e in range(3, 1001):
            assert kleinschmidt_consistency(e)
