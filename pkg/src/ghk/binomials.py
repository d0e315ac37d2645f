"""Exact binomial arithmetic and Macaulay expansions.

Everything here works on plain Python integers, so all results are exact at
arbitrary precision.  The binomial convention used throughout the package is

    C(n, q) = 0  whenever n < q or q < 0,

which makes the shifted-expansion operators total functions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass


def binomial(n: int, q: int) -> int:
    """Binomial coefficient C(n, q), zero whenever n < q or q < 0."""
    if q < 0 or n < q:
        return 0
    return math.comb(n, q)


@dataclass(frozen=True)
class BinomialExpansion:
    """The unique greedy representation of a non-negative integer at a base index.

    ``terms`` is a sequence of (top, bottom) pairs with bottoms running
    consecutively downward from ``base_index``, tops strictly decreasing, and
    top >= bottom in every term, so that

        value = sum of C(top, bottom) over terms.

    ``terms`` is empty exactly when ``value`` is 0.
    """

    base_index: int
    terms: tuple[tuple[int, int], ...]
    value: int

    def __post_init__(self) -> None:
        if self.base_index < 1:
            raise ValueError("base index must be >= 1")
        expected_bottom = self.base_index
        previous_top = None
        total = 0
        for top, bottom in self.terms:
            if bottom != expected_bottom:
                raise ValueError("bottom indices must descend consecutively from the base index")
            if bottom < 1 or top < bottom:
                raise ValueError(f"invalid term ({top}, {bottom}): need top >= bottom >= 1")
            if previous_top is not None and top >= previous_top:
                raise ValueError("top indices must be strictly decreasing")
            previous_top = top
            total += binomial(top, bottom)
            expected_bottom -= 1
        if total != self.value:
            raise ValueError(f"terms sum to {total}, not {self.value}")

    @property
    def tops(self) -> tuple[int, ...]:
        return tuple(t for t, _ in self.terms)

    @property
    def bottoms(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.terms)


def _largest_top(remainder: int, bottom: int) -> int:
    """Largest t with C(t, bottom) <= remainder, given remainder >= 1."""
    if bottom == 1:
        return remainder
    lo, hi = bottom, 2 * bottom + 2
    while binomial(hi, bottom) <= remainder:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binomial(mid, bottom) <= remainder:
            lo = mid
        else:
            hi = mid
    return lo


def macaulay_expand(n: int, i: int) -> BinomialExpansion:
    """Greedy i-binomial expansion of n (n >= 0, i >= 1).

    Takes the largest top t with C(t, b) <= remainder for b = i, i-1, ...
    until the remainder is exhausted; n = 0 yields the empty expansion.
    """
    if n < 0:
        raise ValueError("cannot expand a negative integer")
    if i < 1:
        raise ValueError("base index must be >= 1")
    terms: list[tuple[int, int]] = []
    remainder = n
    for bottom in range(i, 0, -1):
        if remainder == 0:
            break
        top = _largest_top(remainder, bottom)
        terms.append((top, bottom))
        remainder -= binomial(top, bottom)
    # The greedy loop always terminates with remainder 0 because C(t, 1) = t.
    return BinomialExpansion(base_index=i, terms=tuple(terms), value=n)


def shift(expansion: BinomialExpansion, a: int, b: int) -> int:
    """Evaluate the shifted expansion: sum of C(top + b, bottom + a).

    ``a`` moves every bottom index, ``b`` every top; terms whose shifted
    binomial vanishes under the zero convention contribute 0.  The empty
    expansion shifts to 0.
    """
    return sum(binomial(top + b, bottom + a) for top, bottom in expansion.terms)


def macaulay_growth(n: int, d: int) -> int:
    """Maximal growth of a Hilbert function from degree d (>= 1) to d + 1."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    return shift(macaulay_expand(n, d), 1, 1)


def green_restriction(n: int, d: int) -> int:
    """Upper bound for the degree-d dimension after a general linear restriction."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    return shift(macaulay_expand(n, d), 0, -1)


def bg_inverse_min(A: int, d: int) -> int:
    """Smallest s whose maximal growth from degree d - 1 reaches at least A.

    Computed in closed form as the (-1, -1) shift of the d-expansion of A
    (A >= 1, d >= 2); the minimality property is checked in the test suite
    against ``macaulay_growth``.
    """
    if A < 1:
        raise ValueError("A must be >= 1")
    if d < 2:
        raise ValueError("d must be >= 2")
    return shift(macaulay_expand(A, d), -1, -1)
