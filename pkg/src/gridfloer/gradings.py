"""Maslov and Alexander gradings of grid states.

A state is a permutation ``sigma``; its points are the lattice points
``(c, sigma[c])``.  Markers sit at half-integer cell centres, so no state point
ever ties with a marker in either coordinate.

Two code paths live here: per-state functions built on :func:`j_pair`, which
are slow and literal, and the array versions used by the homology pipeline.
Tests check one against the other.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import NotAKnot
from .grid import GridDiagram, is_knot


class Bigrading(NamedTuple):
    m: int
    a: int


class GridState(tuple):
    """A grid state, i.e. a permutation of ``0..n-1`` stored as a tuple."""

    def __new__(cls, sigma: Iterable[int]):
        sigma = tuple(int(v) for v in sigma)
        if sorted(sigma) != list(range(len(sigma))):
            raise ValueError(f"{sigma} is not a permutation")
        return super().__new__(cls, sigma)

    @property
    def n(self) -> int:
        return len(self)

    def points(self) -> list[tuple[int, int]]:
        return [(c, r) for c, r in enumerate(self)]


def _southwest_count(A, B) -> int:
    return sum(1 for p in A for q in B if p[0] < q[0] and p[1] < q[1])


def j_pair(A: Iterable[Sequence], B: Iterable[Sequence]) -> Fraction:
    """Symmetrised count of pairs with one point strictly south-west of the other."""
    A = list(A)
    B = list(B)
    return Fraction(_southwest_count(A, B) + _southwest_count(B, A), 2)


def marker_points(g: GridDiagram, marker: str) -> list[tuple[Fraction, Fraction]]:
    rows = {"O": g.o, "X": g.x}[marker]
    half = Fraction(1, 2)
    return [(c + half, r + half) for c, r in enumerate(rows)]


def maslov(g: GridDiagram, s: Sequence[int], marker: str = "O") -> int:
    """``J(s,s) - 2 J(s,P) + J(P,P) + 1`` with ``P`` the O or X markers."""
    pts = list(enumerate(s))
    P = marker_points(g, marker)
    value = j_pair(pts, pts) - 2 * j_pair(pts, P) + j_pair(P, P) + 1
    assert value.denominator == 1, value
    return int(value)


def alexander(g: GridDiagram, s: Sequence[int]) -> int:
    if not is_knot(g):
        raise NotAKnot("Alexander grading is only defined here for knots")
    twice = maslov(g, s, "O") - maslov(g, s, "X") - (g.n - 1)
    assert twice % 2 == 0
    return twice // 2


def bigrading(g: GridDiagram, s: Sequence[int]) -> Bigrading:
    return Bigrading(maslov(g, s, "O"), alexander(g, s))


# ---------------------------------------------------------------------------
# Array versions

def all_states(n: int) -> np.ndarray:
    """Every permutation of ``0..n-1`` in lexicographic order, shape ``(n!, n)``."""
    perms = np.zeros((1, 0), dtype=np.int8)
    for k in range(1, n + 1):
        # Lex order of S_k: first entry f, then S_{k-1} relabelled to skip f.
        blocks = []
        for f in range(k):
            rest = perms + (perms >= f)
            blocks.append(np.hstack([np.full((len(perms), 1), f, dtype=np.int8), rest.astype(np.int8)]))
        perms = np.vstack(blocks)
    return perms


def state_keys(states: np.ndarray) -> np.ndarray:
    """Base-n integer encoding; increasing in lexicographic order."""
    n = states.shape[1]
    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return states.astype(np.int64) @ weights


def _pair_count(n: int, rows: Sequence[int]) -> int:
    return sum(1 for a in range(n) for b in range(a + 1, n) if rows[a] < rows[b])


def maslov_array(g: GridDiagram, states: np.ndarray, marker: str = "O") -> np.ndarray:
    """Vectorised :func:`maslov` over the rows of ``states``."""
    n = g.n
    rows = np.asarray({"O": g.o, "X": g.x}[marker])
    s = states.astype(np.int16)
    self_pairs = np.zeros(len(s), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            self_pairs += s[:, i] < s[:, j]
    # 2 J(s, P): state point (i, s_i) against marker (c + 1/2, p_c + 1/2).
    cross = np.zeros(len(s), dtype=np.int64)
    for i in range(n):
        col = s[:, i]
        right = rows[i:]  # markers in columns c >= i have c + 1/2 > i
        left = rows[:i]
        cross += (col[:, None] <= right[None, :]).sum(axis=1)
        cross += (col[:, None] > left[None, :]).sum(axis=1)
    return self_pairs - cross + _pair_count(n, rows) + 1


def gradings_array(g: GridDiagram, states: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Maslov (O) and Alexander gradings for every row of ``states``."""
    if not is_knot(g):
        raise NotAKnot("grid represents a link, not a knot")
    mo = maslov_array(g, states, "O")
    mx = maslov_array(g, states, "X")
    twice = mo - mx - (g.n - 1)
    return mo, twice // 2
