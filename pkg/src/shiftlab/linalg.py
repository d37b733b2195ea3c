"""Exact rank over the rationals for dense integer matrices.

Elimination is fraction-free (Bareiss): every intermediate entry is a minor of
the input, so all divisions are exact and no denominators appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "ExactMatrix":
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not data:
                raise ValueError("column count required for an empty matrix")
            cols = len(data[0])
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __getitem__(self, idx: tuple[int, int]) -> int:
        r, c = idx
        return self.entries[r][c]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else
                           tuple(() for _ in range(self.cols)))

    def column_prefix(self, width: int) -> "ExactMatrix":
        return ExactMatrix(self.rows, width, tuple(r[:width] for r in self.entries))


def stack_rows(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.cols:
        raise ValueError(f"column mismatch: {a.cols} vs {b.cols}")
    return ExactMatrix(a.rows + b.rows, a.cols, a.entries + b.entries)


def pivot_columns(m: ExactMatrix) -> list[int]:
    """Pivot columns of a left-to-right Bareiss echelon sweep.

    The number of pivots among the first c columns equals the rank of the
    first c columns, so one sweep serves every column prefix.
    """
    a = [list(r) for r in m.entries]
    nrows = m.rows
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(m.cols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv_row = a[r]
        piv = piv_row[c]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            if f == 0:
                if prev != 1 or piv != 1:
                    for j in range(c + 1, m.cols):
                        row[j] = (piv * row[j]) // prev
                continue
            for j in range(c + 1, m.cols):
                row[j] = (piv * row[j] - f * piv_row[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def rank_exact(m: ExactMatrix) -> int:
    return len(pivot_columns(m))


def prefix_ranks(m: ExactMatrix, widths: Sequence[int]) -> list[int]:
    """Rank of ``m.column_prefix(w)`` for each w, from a single elimination."""
    piv = pivot_columns(m)
    return [sum(1 for c in piv if c < w) for w in widths]
