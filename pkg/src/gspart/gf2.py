"""GF(2) matrices and rank, backing the cut-rank metric.

Rows are stored as Python ints used as bit vectors (bit j = column j), so
Gaussian elimination reduces to word-parallel XOR.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .matching import BipartiteCrossGraph

__all__ = ["BitMatrix", "biadjacency", "rank_gf2"]


@dataclass(frozen=True)
class BitMatrix:
    """Dense binary matrix; ``rows[i]`` has bit j set iff entry (i, j) is 1."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        if self.ncols < 0:
            raise ValueError(f"column count must be non-negative, got {self.ncols}")
        limit = 1 << self.ncols
        for i, row in enumerate(self.rows):
            if row < 0 or row >= limit:
                raise ValueError(f"row {i} has bits outside {self.ncols} columns")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], ncols: int | None = None) -> "BitMatrix":
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            rows.append(sum(1 << j for j, x in enumerate(row) if x))
        return cls(tuple(rows), ncols)

    def to_lists(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.ncols)] for row in self.rows]


def biadjacency(bg: BipartiteCrossGraph) -> BitMatrix:
    """|left| x |right| biadjacency matrix of a cross graph."""
    rows = [0] * len(bg.left)
    for i, j in bg.edges:
        rows[i] |= 1 << j
    return BitMatrix(tuple(rows), len(bg.right))


def rank_gf2(m: BitMatrix) -> int:
    """Rank over GF(2) by Gaussian elimination; the input is not mutated."""
    work = list(m.rows)
    rank = 0
    for col in range(m.ncols):
        bit = 1 << col
        pivot = None
        for r in range(rank, len(work)):
            if work[r] & bit:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and work[r] & bit:
                work[r] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return rank
