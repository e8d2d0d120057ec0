"""Built-in grid diagrams.

``figure8`` and ``knot5_2`` came out of ``scripts/find_grids.py`` (seed 0) and
sit at the minimal grid size for those knots.  The torus knots use the
standard shift grids: O on the diagonal and X shifted ``p`` columns over on a
grid of size ``p + q``.
"""

from __future__ import annotations

from .errors import UnknownName
from .grid import GridDiagram, stabilize


def torus_knot_grid(p: int, q: int) -> GridDiagram:
    """Grid of size ``p + q`` for the ``(p, q)`` torus knot (coprime ``p, q >= 1``)."""
    n = p + q
    return GridDiagram(n, tuple(range(n)), tuple((c + p) % n for c in range(n)))


def _unknot(n: int) -> GridDiagram:
    g = GridDiagram(2, (1, 0), (0, 1))
    while g.n < n:
        g = stabilize(g, 0)
    return g


_LIBRARY = {
    "unknot2": lambda: _unknot(2),
    "unknot3": lambda: _unknot(3),
    "trefoil": lambda: torus_knot_grid(2, 3),
    "figure8": lambda: GridDiagram(6, (3, 4, 0, 5, 2, 1), (5, 2, 3, 1, 0, 4)),
    "torus_2_5": lambda: torus_knot_grid(2, 5),
    "knot5_2": lambda: GridDiagram(7, (6, 0, 5, 4, 2, 3, 1), (3, 2, 1, 6, 5, 0, 4)),
    "torus_3_4": lambda: torus_knot_grid(3, 4),
    "torus_2_7": lambda: torus_knot_grid(2, 7),
}

# Grids every "all library knots" check runs on.  torus_2_7 (n = 9) is the
# performance benchmark and is kept out of the routine sweeps.
ROUTINE = ("unknot2", "unknot3", "trefoil", "figure8", "torus_2_5", "knot5_2", "torus_3_4")


def names() -> list[str]:
    return list(_LIBRARY)


def builtin(name: str) -> GridDiagram:
    try:
        return _LIBRARY[name]()
    except KeyError:
        raise UnknownName(f"no built-in grid named {name!r}; known: {', '.join(_LIBRARY)}") from None
