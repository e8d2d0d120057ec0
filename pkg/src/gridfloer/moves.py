"""Random sequences of grid moves, for invariance checks."""

from __future__ import annotations

import random

from .grid import (
    GridDiagram,
    MoveRecord,
    can_commute,
    find_destabilizations,
)

KINDS = ("translate", "transpose", "commute", "stabilize", "destabilize")


def random_move(g: GridDiagram, rng: random.Random, max_n: int = 9, weights=None) -> MoveRecord:
    """Pick a legal move on ``g``; stabilization is only offered while ``g.n < max_n``."""
    options = {
        "translate": 3,
        "transpose": 1,
        "commute": 3,
        "stabilize": 1,
        "destabilize": 1,
    }
    if weights:
        options.update(weights)
    commutable = [c for c in range(g.n) if can_commute(g, c)]
    destabs = find_destabilizations(g)
    if not commutable:
        options["commute"] = 0
    if g.n >= max_n:
        options["stabilize"] = 0
    if not destabs:
        options["destabilize"] = 0
    kinds = [k for k in KINDS if options[k] > 0]
    kind = rng.choices(kinds, weights=[options[k] for k in kinds])[0]
    if kind == "translate":
        return MoveRecord("translate", (rng.randrange(g.n), rng.randrange(g.n)))
    if kind == "transpose":
        return MoveRecord("transpose")
    if kind == "commute":
        return MoveRecord("commute", (rng.choice(commutable),))
    if kind == "stabilize":
        return MoveRecord("stabilize", (rng.randrange(g.n),))
    return MoveRecord("destabilize", rng.choice(destabs))


def random_sequence(g: GridDiagram, rng: random.Random, length: int, max_n: int = 9, weights=None):
    """Apply ``length`` random moves; returns the final grid and the records used."""
    records = []
    for _ in range(length):
        move = random_move(g, rng, max_n=max_n, weights=weights)
        g = move.apply(g)
        records.append(move)
    return g, records
