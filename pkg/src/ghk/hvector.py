"""Finite sequences of graded dimensions, indexed from degree 0."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class HVector:
    """Candidate Hilbert function of a standard graded artinian algebra.

    Entries are indexed from degree 0 and must start with 1; the socle degree
    is the last index.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("an h-vector needs at least one entry")
        if self.entries[0] != 1:
            raise ValueError("entry in degree 0 must be 1")
        if any(x < 0 for x in self.entries):
            raise ValueError("entries must be non-negative")

    @property
    def socle_degree(self) -> int:
        return len(self.entries) - 1

    def is_symmetric(self) -> bool:
        return self.entries == self.entries[::-1]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)


def entries_of(h: "HVector | Sequence[int]") -> tuple[int, ...]:
    """Coerce an HVector or plain sequence to a tuple of integers."""
    if isinstance(h, HVector):
        return h.entries
    return tuple(int(x) for x in h)
