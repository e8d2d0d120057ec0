"""Linear algebra over the two-element field.

:class:`GF2Matrix` packs each row into one Python ``int`` (bit ``j`` is column
``j``), so row operations are single XORs.  Large sparse boundary maps skip the
matrix object entirely and go through :func:`sparse_rank`, which reduces
columns stored as ``set`` objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np


def _set_bits(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass
class GF2Matrix:
    rows: int
    cols: int
    data: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.data:
            self.data = [0] * self.rows
        if len(self.data) != self.rows:
            raise ValueError(f"{len(self.data)} packed rows for a {self.rows}-row matrix")
        limit = 1 << self.cols
        if any(r < 0 or r >= limit for r in self.data):
            raise ValueError("row data has bits beyond the column count")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "GF2Matrix":
        return cls(rows, cols, [0] * rows)

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_dense(cls, array) -> "GF2Matrix":
        a = np.asarray(array, dtype=np.int64) % 2
        if a.ndim != 2:
            raise ValueError("expected a 2-d array")
        rows, cols = a.shape
        data = []
        for r in range(rows):
            bits = 0
            for c in np.flatnonzero(a[r]):
                bits |= 1 << int(c)
            data.append(bits)
        return cls(rows, cols, data)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[tuple[int, int]]) -> "GF2Matrix":
        """Sum of unit entries; a repeated ``(r, c)`` cancels mod 2."""
        data = [0] * rows
        for r, c in entries:
            data[r] ^= 1 << c
        return cls(rows, cols, data)

    def __getitem__(self, rc):
        r, c = rc
        return (self.data[r] >> c) & 1

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for r, bits in enumerate(self.data):
            for c in _set_bits(bits):
                out[r, c] = 1
        return out

    def __matmul__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for bits in self.data:
            acc = 0
            for k in _set_bits(bits):
                acc ^= other.data[k]
            out.append(acc)
        return GF2Matrix(self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return not any(self.data)

    def nnz(self) -> int:
        return sum(bin(r).count("1") for r in self.data)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols


def gf2_rank(M: GF2Matrix) -> int:
    """Rank by Gaussian elimination on the packed rows."""
    pivots: dict[int, int] = {}  # leading bit -> reduced row
    for row in M.data:
        while row:
            lead = row.bit_length() - 1
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = row
                break
            row ^= p
    return len(pivots)


def sparse_rank(columns: Iterable[set]) -> int:
    """Rank of a matrix given as its nonzero columns, each a set of row indices.

    Column reduction with "lowest one" pivots.  Sparse columns go first, which
    keeps fill-in small on grid complexes.  The input sets are consumed.
    """
    pivots: dict[int, set] = {}
    for col in sorted(columns, key=len):
        while col:
            low = max(col)
            p = pivots.get(low)
            if p is None:
                pivots[low] = col
                break
            col ^= p
    return len(pivots)
