"""Slow reference implementation of the grid complex, for cross-checking.

Nothing here shares code with the fast pipeline beyond the grid type and the
literal per-state grading formulas.  Rectangles are found by scanning every
rectangle on the torus and checking it cell by cell, and homology comes from
one dense matrix over all ``n!`` states.  Limited to ``n <= 6``.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations

from .errors import NotAKnot, OracleTooLarge
from .gf2 import GF2Matrix, gf2_rank
from .gradings import Bigrading, GridState, alexander, maslov
from .grid import GridDiagram, is_knot

MAX_ORACLE_SIZE = 6


def _cells(n, left, width, bottom, height):
    return [((left + dc) % n, (bottom + dr) % n) for dc in range(width) for dr in range(height)]


def is_empty_rectangle(g: GridDiagram, s, left: int, right: int, bottom: int, top: int) -> bool:
    """Check a torus rectangle cell by cell: no marker inside, no point of ``s`` inside."""
    n = g.n
    width = (right - left) % n
    height = (top - bottom) % n
    if width == 0 or height == 0:
        return False
    marked = {(c, g.o[c]) for c in range(n)} | {(c, g.x[c]) for c in range(n)}
    if any(cell in marked for cell in _cells(n, left, width, bottom, height)):
        return False
    points = set(enumerate(s))
    inner = {((left + dc) % n, (bottom + dr) % n) for dc in range(1, width) for dr in range(1, height)}
    return not (inner & points)


def brute_force_rectangles(g: GridDiagram, s) -> list[tuple[GridState, tuple[int, int, int, int]]]:
    """Scan every torus rectangle with lattice corners; keep the empty ones out of ``s``."""
    n = g.n
    s = tuple(s)
    found = []
    for left in range(n):
        for right in range(n):
            for bottom in range(n):
                for top in range(n):
                    if left == right or bottom == top:
                        continue
                    if s[left] != bottom or s[right] != top:
                        continue
                    if is_empty_rectangle(g, s, left, right, bottom, top):
                        t = list(s)
                        t[left], t[right] = top, bottom
                        found.append((GridState(t), (left, right, bottom, top)))
    return sorted(found)


def _check_size(g):
    if g.n > MAX_ORACLE_SIZE:
        raise OracleTooLarge(f"dense oracle refuses n={g.n} > {MAX_ORACLE_SIZE}")


def dense_complex(g: GridDiagram):
    """All states, their bigradings, and the full boundary matrix (rows = targets)."""
    _check_size(g)
    if not is_knot(g):
        raise NotAKnot("grid represents a link, not a knot")
    states = [GridState(p) for p in permutations(range(g.n))]
    index = {s: k for k, s in enumerate(states)}
    grades = [Bigrading(maslov(g, s, "O"), alexander(g, s)) for s in states]
    entries = []
    for k, s in enumerate(states):
        for t, _ in brute_force_rectangles(g, s):
            entries.append((index[t], k))
    return states, grades, GF2Matrix.from_entries(len(states), len(states), entries)


def dense_total_dimension(g: GridDiagram) -> int:
    """``N - 2 rank(D)``, using only that D squares to zero."""
    states, _, D = dense_complex(g)
    return len(states) - 2 * gf2_rank(D)


def dense_homology(g: GridDiagram) -> dict[tuple[int, int], int]:
    """Bigraded homology computed from the dense matrix, bigrading by bigrading."""
    states, grades, D = dense_complex(g)
    N = len(states)
    columns = [0] * N  # column k of D as a bitmask over rows
    for r, bits in enumerate(D.data):
        for k in range(N):
            if (bits >> k) & 1:
                columns[k] |= 1 << r
    counts = Counter(grades)
    out = {}
    for gr, count in counts.items():
        members = [k for k in range(N) if grades[k] == gr]
        rank_out = gf2_rank(GF2Matrix(len(members), N, [columns[k] for k in members]))
        rank_in = gf2_rank(GF2Matrix(len(members), N, [D.data[k] for k in members]))
        dim = count - rank_out - rank_in
        if dim:
            out[(gr.m, gr.a)] = dim
    return dict(sorted(out.items()))


def euler_characteristic(g: GridDiagram) -> dict[int, int]:
    """``sum over states of (-1)^M t^A`` as ``{exponent: coefficient}``; needs no homology."""
    if not is_knot(g):
        raise NotAKnot("grid represents a link, not a knot")
    out: Counter = Counter()
    for p in permutations(range(g.n)):
        out[alexander(g, p)] += (-1) ** (maslov(g, p, "O") % 2)
    return {a: c for a, c in sorted(out.items()) if c}
