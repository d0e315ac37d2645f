"""Explicit construction of symmetric h-vectors of prescribed codimension.

The pipeline: decompose the codimension r, build the smallest level h-vector
with the resulting socle type, symmetrize it by trivial extension, and bump
the interior by one when the decomposition is exact so the first entry lands
on r.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .binomials import binomial, macaulay_expand, shift
from .hvector import HVector, entries_of
from .oracle import osequence_check


@dataclass(frozen=True)
class RDecomposition:
    """r = m + C(m+e-3, e-1) + sum of C(a_j, j) for j = e-2, ..., 1.

    ``m`` is the largest integer keeping the first two summands <= r, and the
    ``a`` values come from the greedy (e-2)-expansion of the remainder, stored
    from bottom index e-2 down to 1 with zeros at unused indices.
    """

    r: int
    e: int
    m: int
    a: tuple[int, ...]

    @property
    def binomial_term(self) -> int:
        return binomial(self.m + self.e - 3, self.e - 1)

    @property
    def remainder(self) -> int:
        return self.r - self.m - self.binomial_term

    @property
    def exact_case(self) -> bool:
        return all(x == 0 for x in self.a)

    def a_at(self, j: int) -> int:
        """The a value at bottom index j (1 <= j <= e-2)."""
        return self.a[self.e - 2 - j]


def decompose_r(r: int, e: int) -> RDecomposition:
    """Decompose a positive codimension r at socle degree e >= 3."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if e < 3:
        raise ValueError("socle degree must be >= 3")
    m = 1
    while (m + 1) + binomial(m + 1 + e - 3, e - 1) <= r:
        m += 1
    remainder = r - m - binomial(m + e - 3, e - 1)
    a = [0] * (e - 2)
    if remainder:
        for top, bottom in macaulay_expand(remainder, e - 2).terms:
            a[e - 2 - bottom] = top
    return RDecomposition(r=r, e=e, m=m, a=tuple(a))


def minimal_level_hvector(r: int, e: int) -> tuple[int, ...]:
    """Smallest level h-vector of socle degree e-1 and socle type r - m.

    Entry i is the (e-1-i)-fold downward shift of the (e-1)-expansion of the
    top entry r - m; the degree-0 value always comes out as 1.
    """
    decomposition = decompose_r(r, e)
    socle_type = r - decomposition.m
    if socle_type < 1:
        raise ValueError("r must exceed the decomposition's m (fails only for r = 1)")
    expansion = macaulay_expand(socle_type, e - 1)
    return tuple(shift(expansion, -(e - 1 - i), -(e - 1 - i)) for i in range(e))


def trivial_extension(level: Sequence[int]) -> HVector:
    """Symmetrize a level h-vector: H_i = h_i + h_{j+1-i}, capped by 1 at both ends."""
    h = entries_of(level)
    if not h or h[0] != 1:
        raise ValueError("level h-vector must start with 1")
    j = len(h) - 1
    middle = [h[i] + h[j + 1 - i] for i in range(1, j + 1)]
    return HVector(entries=(1, *middle, 1))


def plus_one(h: "HVector | Sequence[int]") -> HVector:
    """Add 1 to every interior entry of a symmetric h-vector with 1 at both ends."""
    entries = entries_of(h)
    if len(entries) < 2 or entries[0] != 1 or entries[-1] != 1:
        raise ValueError("expected a sequence delimited by 1 on both ends")
    if entries != entries[::-1]:
        raise ValueError("expected a symmetric sequence")
    return HVector(entries=(1, *(x + 1 for x in entries[1:-1]), 1))


@dataclass(frozen=True)
class GorensteinCandidate:
    """A constructed symmetric h-vector of codimension r and socle degree e.

    ``exact_case`` records whether r = m + C(m+e-3, e-1); exactly then the
    plus-one adjustment is applied, so ``plus_one_applied`` always equals it.
    """

    hvector: HVector
    r: int
    e: int
    m: int
    exact_case: bool
    plus_one_applied: bool
    level_part: tuple[int, ...]


def gorenstein_candidate(r: int, e: int) -> GorensteinCandidate:
    """Construct the candidate h-vector for codimension r >= 2, socle degree e >= 3."""
    if r < 2:
        raise ValueError("r must be >= 2 (codimension 1 is the all-ones vector)")
    if e < 3:
        raise ValueError("socle degree must be >= 3")
    decomposition = decompose_r(r, e)
    level = minimal_level_hvector(r, e)
    extended = trivial_extension(level)
    exact = decomposition.exact_case
    hv = plus_one(extended) if exact else extended
    assert hv[1] == r, f"construction yielded h_1 = {hv[1]}, expected {r}"
    assert hv.is_symmetric()
    assert osequence_check(hv), "constructed h-vector violates the growth bound"
    return GorensteinCandidate(
        hvector=hv,
        r=r,
        e=e,
        m=decomposition.m,
        exact_case=exact,
        plus_one_applied=exact,
        level_part=level,
    )
