"""Lower bounds and unimodality thresholds for symmetric (Gorenstein) h-vectors."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .binomials import binomial, macaulay_expand, shift


def step_lower(h_i: int, e: int, i: int) -> int:
    """Lower bound for the degree i+1 entry, given the degree-i entry h_i.

    Valid for 1 <= i <= e/2 - 1.  Both summands shift the (e-i)-expansion of
    h_i; in the second one the bottom indices move by -(e-2i-1) while the tops
    move by -(e-2i), i.e. the top shift is one deeper than the bottom shift.
    """
    if h_i < 1:
        raise ValueError("h_i must be >= 1")
    if i < 1 or 2 * i + 2 > e:
        raise ValueError(f"step bound not applicable at degree i={i} for socle degree e={e}")
    expansion = macaulay_expand(h_i, e - i)
    return shift(expansion, -1, -1) + shift(expansion, -(e - 2 * i - 1), -(e - 2 * i))


@dataclass(frozen=True)
class EnvelopeResult:
    """Iterated lower bounds for degrees 0..floor(e/2) at codimension r.

    ``lower`` iterates the full two-term step bound; ``closed_form`` is the
    one-term chain evaluated directly on the (e-1)-expansion of r; ``g1`` keeps
    only the leading binomial of that chain.  Index 0 is the trivial value 1.
    """

    r: int
    e: int
    lower: tuple[int, ...]
    closed_form: tuple[int, ...]
    g1: tuple[int, ...]


def envelope_lower(r: int, e: int) -> EnvelopeResult:
    """Iterate the step bound from h_1 = r up to the middle degree."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if e < 3:
        raise ValueError("socle degree must be >= 3")
    half = e // 2
    lower = [1, r]
    for i in range(1, half):
        lower.append(step_lower(lower[i], e, i))
    expansion = macaulay_expand(r, e - 1)
    k = expansion.terms[0][0]
    closed_form = [1] + [shift(expansion, -(i - 1), -(i - 1)) for i in range(1, half + 1)]
    g1 = [1] + [binomial(k - i + 1, e - i) for i in range(1, half + 1)]
    return EnvelopeResult(r=r, e=e, lower=tuple(lower), closed_form=tuple(closed_form), g1=tuple(g1))


def mid_lower(r: int, e: int) -> int:
    """Two-term closed-form lower bound for the middle entry (e even, e >= 4)."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if e < 4 or e % 2:
        raise ValueError("middle-degree bound requires an even socle degree e >= 4")
    expansion = macaulay_expand(r, e - 1)
    half = e // 2
    return shift(expansion, -half + 1, -half + 1) + shift(expansion, -half + 1, -half)


def unimodality_threshold(e: int, i: int) -> int:
    """Value below which the step bound forces non-decrease at degree i.

    Equals C(e-i+2, 2) - C(e-2i-1, 2) = (i+3)(2e-3i)/2; the product is always
    even, so the division is exact.
    """
    if i < 1 or 2 * i + 2 > e:
        raise ValueError(f"threshold not defined at degree i={i} for socle degree e={e}")
    return (i + 3) * (2 * e - 3 * i) // 2


def unimodal_step_guaranteed(h_i: int, e: int, i: int) -> bool:
    """Whether h_i is small enough that step_lower(h_i, e, i) >= h_i is forced."""
    return h_i < unimodality_threshold(e, i)


def e0_bound(r: int, i: int) -> Fraction:
    """Socle-degree threshold: any symmetric h-vector of codimension r with
    socle degree strictly above this value is unimodal through degree i + 1.

    Returns the exact rational (i+1)(i+2)...(i+r-1) / ((i+3)(r-1)!) + 3i/2.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if i < 1:
        raise ValueError("i must be >= 1")
    numerator = 1
    for j in range(1, r):
        numerator *= i + j
    return Fraction(numerator, (i + 3) * math.factorial(r - 1)) + Fraction(3 * i, 2)


@dataclass(frozen=True)
class Codim3Certificate:
    """Per-socle-degree verification that codimension 3 forces unimodality."""

    e_max: int
    rows: tuple[tuple[int, Fraction, bool], ...]  # (e, rhs, e > rhs)

    @property
    def all_pass(self) -> bool:
        return all(ok for _, _, ok in self.rows)


def codim3_unimodality_certificate(e_max: int) -> Codim3Certificate:
    """Check e > f(f+1)/(2(f+2)) + 3(f-1)/2 with f = floor(e/2), for 4 <= e <= e_max.

    This is the r = 3 instance of ``e0_bound`` evaluated at i = floor(e/2) - 1,
    the last degree needed for full unimodality; all arithmetic is exact.
    """
    if e_max < 4:
        raise ValueError("e_max must be >= 4")
    rows = []
    for e in range(4, e_max + 1):
        f = e // 2
        rhs = Fraction(f * (f + 1), 2 * (f + 2)) + Fraction(3 * (f - 1), 2)
        rows.append((e, rhs, e > rhs))
    return Codim3Certificate(e_max=e_max, rows=tuple(rows))
