"""Independent brute-force verification machinery.

Lex-segment ideals give a counting oracle for the growth bound, and exact
Gaussian elimination over a prime field computes Hilbert functions of apolar
algebras from catalecticant ranks.  Nothing here goes through floating point.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .binomials import binomial, macaulay_growth
from .hvector import HVector, entries_of

Monomial = tuple[int, ...]

DEFAULT_PRIME = 32003


def monomials_of_degree(num_vars: int, degree: int) -> list[Monomial]:
    """All exponent vectors of the given total degree, in descending lex order
    with x1 > x2 > ... > xn."""
    if num_vars < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if num_vars == 1:
        return [(degree,)]
    out: list[Monomial] = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(num_vars - 1, degree - first):
            out.append((first, *rest))
    return out


@dataclass(frozen=True)
class MonomialSet:
    """A set of distinct monomials of one degree in a fixed number of variables."""

    num_vars: int
    degree: int
    exponents: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        seen = set()
        for exp in self.exponents:
            if len(exp) != self.num_vars or any(x < 0 for x in exp):
                raise ValueError(f"bad exponent vector {exp}")
            if sum(exp) != self.degree:
                raise ValueError(f"{exp} does not have degree {self.degree}")
            if exp in seen:
                raise ValueError(f"duplicate monomial {exp}")
            seen.add(exp)


@dataclass(frozen=True)
class DualForm:
    """A homogeneous polynomial with prime-field coefficients, stored sparsely."""

    num_vars: int
    degree: int
    terms: tuple[tuple[Monomial, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for exp, coeff in self.terms:
            if len(exp) != self.num_vars or any(x < 0 for x in exp):
                raise ValueError(f"bad exponent vector {exp}")
            if sum(exp) != self.degree:
                raise ValueError(f"{exp} does not have degree {self.degree}")
            if coeff == 0:
                raise ValueError("zero coefficients must be omitted")
            if exp in seen:
                raise ValueError(f"duplicate monomial {exp}")
            seen.add(exp)

    def to_json_dict(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "degree": self.degree,
            "terms": [[list(exp), coeff] for exp, coeff in self.terms],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "DualForm":
        terms = tuple((tuple(int(x) for x in exp), int(coeff)) for exp, coeff in data["terms"])
        return cls(num_vars=int(data["num_vars"]), degree=int(data["degree"]), terms=terms)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def matrix_rank_mod_p(matrix: "Sequence[Sequence[int]] | np.ndarray", p: int) -> int:
    """Rank over F_p by exact integer Gaussian elimination.

    Entries are reduced mod p into int64; p must stay below 2^31 so the row
    updates cannot overflow.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p >= 1 << 31:
        raise ValueError("prime too large for int64 elimination")
    a = np.asarray(matrix, dtype=np.int64) % p
    if a.size == 0:
        return 0
    m, n = a.shape
    rank = 0
    for col in range(n):
        pivot = None
        for row in range(rank, m):
            if a[row, col]:
                pivot = row
                break
        if pivot is None:
            continue
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inv) % p
        below = np.nonzero(a[rank + 1:, col])[0]
        if below.size:
            rows = below + rank + 1
            a[rows] = (a[rows] - np.outer(a[rows, col], a[rank])) % p
        rank += 1
        if rank == m:
            break
    return rank


def lex_growth(h_d: int, d: int, num_vars: int) -> int:
    """Count degree-(d+1) standard monomials of the lex ideal leaving h_d
    standard monomials in degree d.

    The ideal takes the lex-first monomials; its next graded piece is the set
    of all variable multiples.  Matches ``macaulay_growth`` whenever the
    variable count can accommodate the expansion.
    """
    if h_d < 1:
        raise ValueError("h_d must be >= 1")
    if d < 1:
        raise ValueError("degree must be >= 1")
    degree_d = monomials_of_degree(num_vars, d)
    if h_d > len(degree_d):
        raise ValueError(f"h_d = {h_d} exceeds the {len(degree_d)} degree-{d} monomials in {num_vars} variables")
    ideal = degree_d[: len(degree_d) - h_d]
    multiples = set()
    for mono in ideal:
        for v in range(num_vars):
            bumped = list(mono)
            bumped[v] += 1
            multiples.add(tuple(bumped))
    return binomial(num_vars + d, d + 1) - len(multiples)


def osequence_check(h: "HVector | Sequence[int]") -> bool:
    """Whether consecutive entries obey the maximal-growth bound everywhere."""
    entries = entries_of(h)
    if not entries or entries[0] != 1:
        raise ValueError("sequence must start with 1 in degree 0")
    if any(x < 0 for x in entries):
        return False
    for d in range(1, len(entries) - 1):
        if entries[d + 1] > macaulay_growth(entries[d], d):
            return False
    return True


def si_sequence_check(h: "HVector | Sequence[int]") -> bool:
    """Symmetric, and the first difference up to the middle is an O-sequence.

    The difference sequence being an O-sequence forces non-negativity up to
    the middle, hence unimodality of the original sequence.
    """
    entries = entries_of(h)
    if not entries or entries[0] != 1:
        raise ValueError("sequence must start with 1 in degree 0")
    if entries != entries[::-1]:
        return False
    e = len(entries) - 1
    half = (e + 1) // 2
    diff = [1] + [entries[i] - entries[i - 1] for i in range(1, half + 1)]
    if any(x < 0 for x in diff):
        return False
    return osequence_check(diff)


def _lex_standard_by_degree(h: Sequence[int], num_vars: int) -> list[list[Monomial]]:
    """Standard monomials of the lex ideal realizing the O-sequence h, per degree."""
    entries = entries_of(h)
    if not osequence_check(entries):
        raise ValueError("sequence is not an O-sequence")
    standard: list[list[Monomial]] = []
    previous_ideal: set[Monomial] = set()
    for d, h_d in enumerate(entries):
        all_monomials = monomials_of_degree(num_vars, d)
        if h_d > len(all_monomials):
            raise ValueError(
                f"h_{d} = {h_d} does not fit in {num_vars} variables "
                f"({len(all_monomials)} monomials available)"
            )
        cut = len(all_monomials) - h_d
        ideal = set(all_monomials[:cut])
        if d:
            multiples = set()
            for mono in previous_ideal:
                for v in range(num_vars):
                    bumped = list(mono)
                    bumped[v] += 1
                    multiples.add(tuple(bumped))
            # Lex segments of an O-sequence always close under multiplication.
            assert multiples <= ideal, "lex segments failed to form an ideal"
        standard.append(all_monomials[cut:])
        previous_ideal = ideal
    return standard


def lex_level_check(h: "HVector | Sequence[int]", num_vars: int) -> bool:
    """Whether the lex ideal with Hilbert function h, truncated after the top
    degree, has its socle concentrated in the top degree.

    True certifies that h is a level sequence; False only says the lex ideal
    fails, not that every algebra does.
    """
    entries = entries_of(h)
    if entries[-1] < 1:
        raise ValueError("top entry must be >= 1")
    standard = _lex_standard_by_degree(entries, num_vars)
    top = len(entries) - 1
    for d in range(top):
        survivors = set(standard[d + 1])
        for mono in standard[d]:
            if not any(
                tuple(x + (1 if v == idx else 0) for idx, x in enumerate(mono)) in survivors
                for v in range(num_vars)
            ):
                return False
    return True


def lex_socle_monomials(h: "HVector | Sequence[int]", num_vars: int) -> MonomialSet:
    """Top-degree standard monomials of the lex ideal realizing h."""
    entries = entries_of(h)
    standard = _lex_standard_by_degree(entries, num_vars)
    return MonomialSet(
        num_vars=num_vars,
        degree=len(entries) - 1,
        exponents=tuple(standard[-1]),
    )


def compressed_hvector(r: int, e: int) -> HVector:
    """Entrywise-maximal symmetric h-vector: min(C(r-1+i, i), C(r-1+e-i, e-i))."""
    if r < 1 or e < 1:
        raise ValueError("r and e must be >= 1")
    return HVector(entries=tuple(
        min(binomial(r - 1 + i, i), binomial(r - 1 + e - i, e - i)) for i in range(e + 1)
    ))


def catalecticant_hilbert(form: DualForm, p: int = DEFAULT_PRIME) -> HVector:
    """Hilbert function of the apolar algebra of a form, over F_p.

    Entry i is the rank of the contraction pairing between degree-i and
    degree-(e-i) monomials: the matrix whose (u, v) entry is the coefficient
    of u + v in the form.  Ranks come in a symmetric sequence because the
    matrices in complementary degrees are mutual transposes.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p <= 2 * form.degree:
        raise ValueError("prime must exceed twice the degree of the form")
    coeffs = {exp: coeff % p for exp, coeff in form.terms if coeff % p}
    if not coeffs:
        raise ValueError("form is zero modulo p")
    n, e = form.num_vars, form.degree
    ranks = []
    for i in range(e + 1):
        rows = monomials_of_degree(n, i)
        cols = monomials_of_degree(n, e - i)
        matrix = [
            [coeffs.get(tuple(u + v for u, v in zip(row, col)), 0) for col in cols]
            for row in rows
        ]
        ranks.append(matrix_rank_mod_p(matrix, p))
    assert ranks == ranks[::-1], "catalecticant ranks must be symmetric"
    return HVector(entries=tuple(ranks))


def trivial_extension_form(socle_monomials: MonomialSet) -> DualForm:
    """Attach a fresh linking variable to each socle monomial.

    The result is a form of one degree higher in m + s variables (s = number
    of monomials), with all coefficients 1.
    """
    if not socle_monomials.exponents:
        raise ValueError("need at least one monomial")
    s = len(socle_monomials.exponents)
    terms = []
    for t, exp in enumerate(socle_monomials.exponents):
        fresh = tuple(1 if k == t else 0 for k in range(s))
        terms.append(((*exp, *fresh), 1))
    return DualForm(
        num_vars=socle_monomials.num_vars + s,
        degree=socle_monomials.degree + 1,
        terms=tuple(terms),
    )


def random_form(num_vars: int, degree: int, p: int, rng: random.Random) -> DualForm:
    """Dense random form: every monomial gets a uniform nonzero coefficient."""
    terms = tuple(
        (exp, rng.randrange(1, p)) for exp in monomials_of_degree(num_vars, degree)
    )
    return DualForm(num_vars=num_vars, degree=degree, terms=terms)


def restricted_ring_dimension(num_vars: int, d: int, p: int, rng: random.Random) -> int:
    """Degree-d dimension of the full polynomial ring modulo a random linear form.

    Computed as C(n+d-1, d) minus the rank of multiplication by the form from
    degree d-1 to degree d, all over F_p.
    """
    if num_vars < 1 or d < 1:
        raise ValueError("need num_vars >= 1 and d >= 1")
    coefficients = [rng.randrange(1, p) for _ in range(num_vars)]
    lower = monomials_of_degree(num_vars, d - 1)
    upper = monomials_of_degree(num_vars, d)
    index = {mono: j for j, mono in enumerate(upper)}
    matrix = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for i, mono in enumerate(lower):
        for v in range(num_vars):
            bumped = tuple(x + (1 if k == v else 0) for k, x in enumerate(mono))
            matrix[i, index[bumped]] = (matrix[i, index[bumped]] + coefficients[v]) % p
    return len(upper) - matrix_rank_mod_p(matrix, p)
