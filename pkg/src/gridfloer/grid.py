"""Toroidal grid diagrams and the moves between them.

A grid of size ``n`` is stored column-wise: ``o[c]`` and ``x[c]`` are the rows
of the O and X markers in column ``c``.  Rows and columns are numbered from 0,
row 0 is at the bottom, and all index arithmetic is taken mod ``n`` since the
grid lives on a torus.  Markers sit at cell centres ``(c + 1/2, row + 1/2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    DegenerateSize,
    NotAPermutation,
    NotCommutable,
    NotDestabilizable,
    OverlappingMarker,
    ParseError,
)


@dataclass(frozen=True)
class GridDiagram:
    n: int
    o: tuple[int, ...]
    x: tuple[int, ...]

    def __post_init__(self):
        # Normalise to tuples so equal grids hash equally whatever was passed in.
        object.__setattr__(self, "o", tuple(int(v) for v in self.o))
        object.__setattr__(self, "x", tuple(int(v) for v in self.x))
        _check(self.n, self.o, self.x)

    def __str__(self):
        return serialize(self).strip().replace("\n", "; ")

    def to_dict(self) -> dict:
        return {"n": self.n, "o": list(self.o), "x": list(self.x)}


def _check(n, o, x):
    if n < 2:
        raise DegenerateSize(f"grid size must be at least 2, got {n}")
    for name, perm in (("O", o), ("X", x)):
        if len(perm) != n:
            raise NotAPermutation(f"{name} has {len(perm)} entries, expected {n}")
        if sorted(perm) != list(range(n)):
            raise NotAPermutation(f"{name} rows {list(perm)} are not a permutation of 0..{n - 1}")
    clash = [c for c in range(n) if o[c] == x[c]]
    if clash:
        raise OverlappingMarker(f"O and X share a cell in column(s) {clash}")


def validate(n: int, o: Sequence[int], x: Sequence[int]) -> GridDiagram:
    """Build a :class:`GridDiagram`, raising an :class:`InvalidGrid` subclass on bad data."""
    return GridDiagram(int(n), tuple(o), tuple(x))


def inverse(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def component_cycles(g: GridDiagram) -> list[list[int]]:
    """Columns grouped by link component.

    Following a component: from column ``c`` go to the X marker, then along
    its row to the O marker of that row, whose column is the next one.
    """
    o_col = inverse(g.o)
    seen = [False] * g.n
    cycles = []
    for start in range(g.n):
        if seen[start]:
            continue
        cyc = []
        c = start
        while not seen[c]:
            seen[c] = True
            cyc.append(c)
            c = o_col[g.x[c]]
        cycles.append(cyc)
    return cycles


def component_count(g: GridDiagram) -> int:
    return len(component_cycles(g))


def is_knot(g: GridDiagram) -> bool:
    return component_count(g) == 1


# ---------------------------------------------------------------------------
# Moves

@dataclass(frozen=True)
class MoveRecord:
    """A replayable grid move.

    ``kind`` is one of ``translate``, ``transpose``, ``commute``, ``stabilize``
    or ``destabilize``; ``args`` holds the integers the move needs.
    """
    kind: str
    args: tuple[int, ...] = field(default=())

    def apply(self, g: GridDiagram) -> GridDiagram:
        if self.kind == "translate":
            return translate(g, *self.args)
        if self.kind == "transpose":
            return transpose(g)
        if self.kind == "commute":
            return commute_columns(g, *self.args)
        if self.kind == "stabilize":
            return stabilize(g, *self.args)
        if self.kind == "destabilize":
            return destabilize(g, *self.args)
        raise ValueError(f"unknown move kind {self.kind!r}")

    def __str__(self):
        return f"{self.kind}({', '.join(map(str, self.args))})"


def translate(g: GridDiagram, dx: int, dy: int) -> GridDiagram:
    """Shift every column by ``dx`` and every row by ``dy`` (mod n)."""
    n = g.n
    o = [0] * n
    x = [0] * n
    for c in range(n):
        o[(c + dx) % n] = (g.o[c] + dy) % n
        x[(c + dx) % n] = (g.x[c] + dy) % n
    return GridDiagram(n, tuple(o), tuple(x))


def transpose(g: GridDiagram) -> GridDiagram:
    """Reflect the grid in its diagonal, exchanging rows and columns."""
    return GridDiagram(g.n, inverse(g.o), inverse(g.x))


def _span(g: GridDiagram, c: int) -> tuple[int, int]:
    return min(g.o[c], g.x[c]), max(g.o[c], g.x[c])


def can_commute(g: GridDiagram, c: int) -> bool:
    """True when columns ``c`` and ``c+1`` may be exchanged.

    The vertical spans of the two columns must be disjoint or strictly
    nested.  Spans sharing an endpoint row are refused even where the move
    would be legal, which only loses moves and never admits a wrong one.
    """
    c %= g.n
    d = (c + 1) % g.n
    lo1, hi1 = _span(g, c)
    lo2, hi2 = _span(g, d)
    if {lo1, hi1} & {lo2, hi2}:
        return False
    if hi1 < lo2 or hi2 < lo1:
        return True
    return (lo1 < lo2 and hi2 < hi1) or (lo2 < lo1 and hi1 < hi2)


def commute_columns(g: GridDiagram, c: int) -> GridDiagram:
    """Exchange columns ``c`` and ``c+1`` (mod n); raises NotCommutable if they interleave."""
    if not can_commute(g, c):
        raise NotCommutable(f"columns {c % g.n} and {(c + 1) % g.n} interleave")
    c %= g.n
    d = (c + 1) % g.n
    o = list(g.o)
    x = list(g.x)
    o[c], o[d] = o[d], o[c]
    x[c], x[d] = x[d], x[c]
    return GridDiagram(g.n, tuple(o), tuple(x))


def stabilize(g: GridDiagram, c: int) -> GridDiagram:
    """Grow the grid by one, replacing the X marker of column ``c`` with a 2x2 kink.

    With ``r = x[c]`` a new column is inserted at ``c`` and a new row at ``r``.
    In the enlarged grid column ``c`` carries O at ``r`` and X at ``r+1``, and
    column ``c+1`` carries the old O of column ``c`` and an X at ``r``.  The O
    that shared row ``r`` with the old X moves up into row ``r+1``.
    """
    n = g.n
    c %= n
    r = g.x[c]

    def row(v):
        return v if v < r else v + 1

    o = []
    x = []
    for k in range(n):
        if k == c:
            o += [r, row(g.o[c])]
            x += [r + 1, r]
        else:
            o.append(row(g.o[k]))
            x.append(row(g.x[k]))
    return GridDiagram(n + 1, tuple(o), tuple(x))


def destabilize(g: GridDiagram, c: int, r: int) -> GridDiagram:
    """Undo :func:`stabilize`: collapse the kink whose O sits at ``(c, r)``."""
    n = g.n
    if not (0 <= c < n - 1 and 0 <= r < n - 1) or n < 3:
        raise NotDestabilizable(f"no stabilization pattern at column {c}, row {r}")
    if not (g.o[c] == r and g.x[c] == r + 1 and g.x[c + 1] == r):
        raise NotDestabilizable(f"no stabilization pattern at column {c}, row {r}")

    def row(v):
        return v if v <= r else v - 1

    o = []
    x = []
    for k in range(n):
        if k == c:
            continue
        if k == c + 1:
            o.append(row(g.o[k]))
            x.append(r)
        else:
            o.append(row(g.o[k]))
            x.append(row(g.x[k]))
    return GridDiagram(n - 1, tuple(o), tuple(x))


def find_destabilizations(g: GridDiagram) -> list[tuple[int, int]]:
    """Every ``(c, r)`` at which :func:`destabilize` applies."""
    out = []
    for c in range(g.n - 1):
        r = g.o[c]
        if r < g.n - 1 and g.x[c] == r + 1 and g.x[c + 1] == r:
            out.append((c, r))
    return out


# ---------------------------------------------------------------------------
# Text format

_HEADER = re.compile(r"grid\s+(\S+)\s*$")


def serialize(g: GridDiagram) -> str:
    return (
        f"grid {g.n}\n"
        f"O {' '.join(map(str, g.o))}\n"
        f"X {' '.join(map(str, g.x))}\n"
    )


def _ints(tokens, lineno, line):
    vals = []
    for tok in tokens:
        try:
            vals.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", lineno, line.index(tok) + 1) from None
    return vals


def parse(text: str) -> GridDiagram:
    """Read the three-line grid format; ``#`` lines and blank lines are ignored."""
    lines = [
        (i, ln.strip())
        for i, ln in enumerate(text.splitlines(), start=1)
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty grid file", 1)
    lineno, head = lines[0]
    m = _HEADER.match(head)
    if not m:
        raise ParseError("expected 'grid <n>'", lineno)
    try:
        n = int(m.group(1))
    except ValueError:
        raise ParseError(f"grid size {m.group(1)!r} is not an integer", lineno, head.index(m.group(1)) + 1) from None
    rows = {}
    for lineno, line in lines[1:]:
        tag, *rest = line.split()
        if tag not in ("O", "X"):
            raise ParseError(f"unexpected line tag {tag!r}", lineno)
        if tag in rows:
            raise ParseError(f"duplicate {tag} line", lineno)
        rows[tag] = _ints(rest, lineno, line)
        if len(rows[tag]) != n:
            raise ParseError(f"{tag} line has {len(rows[tag])} entries, expected {n}", lineno)
    for tag in ("O", "X"):
        if tag not in rows:
            raise ParseError(f"missing {tag} line", lines[-1][0] + 1)
    return validate(n, rows["O"], rows["X"])
