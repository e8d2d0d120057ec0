"""Bigraded homology of the tilde grid complex over GF(2).

The differential keeps the Alexander grading and lowers the Maslov grading
by one, so the complex splits into one chain complex per Alexander grading.
Each of those is handled independently (optionally in worker processes):
its states are collected, their rectangles enumerated, and
``dim H_m = #states_m - rank d_m - rank d_{m+1}`` read off by rank-nullity.
"""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, Mapping

import numpy as np

from .differential import arrows_mod2, locate, rectangle_arrays
from .errors import NotAKnot
from .gf2 import sparse_rank
from .gradings import all_states, gradings_array, state_keys
from .grid import GridDiagram, is_knot

WORKERS_ENV = "GRIDFLOER_WORKERS"


class BigradedDimensions(Mapping):
    """Finitely supported map ``(m, a) -> dim`` with only positive entries stored."""

    def __init__(self, data: Mapping | Iterable = ()):
        items = data.items() if isinstance(data, Mapping) else data
        store: dict[tuple[int, int], int] = {}
        for key, dim in items:
            m, a = key
            dim = int(dim)
            if dim < 0:
                raise ValueError(f"negative dimension {dim} at {(m, a)}")
            if dim:
                store[(int(m), int(a))] = store.get((int(m), int(a)), 0) + dim
        self._data = dict(sorted(store.items()))

    def __getitem__(self, key):
        return self._data[key]

    def get(self, key, default=0):
        return self._data.get(key, default)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return self._data == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._data.items()))

    def __repr__(self):
        return f"BigradedDimensions({self._data})"

    def total(self) -> int:
        return sum(self._data.values())

    def by_alexander(self) -> dict[int, int]:
        out: dict[int, int] = defaultdict(int)
        for (_, a), d in self._data.items():
            out[a] += d
        return dict(sorted(out.items()))

    def as_rows(self) -> list[list[int]]:
        """``[[m, a, dim], ...]`` sorted by Alexander grading descending, then Maslov descending."""
        return [[m, a, d] for (m, a), d in sorted(self._data.items(), key=lambda kv: (-kv[0][1], -kv[0][0]))]


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def alexander_buckets(g: GridDiagram) -> dict[int, tuple[np.ndarray, np.ndarray]]:
    """Group all states by Alexander grading: ``a -> (states, maslov)``, each in lex order."""
    if not is_knot(g):
        raise NotAKnot("grid represents a link, not a knot")
    states = all_states(g.n)
    mo, alex = gradings_array(g, states)
    out = {}
    for a in np.unique(alex):
        sel = np.flatnonzero(alex == a)
        out[int(a)] = (states[sel], mo[sel])
    return out


def bucket_homology(g: GridDiagram, states: np.ndarray, maslov: np.ndarray) -> dict[int, int]:
    """Homology ``m -> dim`` of one Alexander summand.

    ``states`` must hold every state of one Alexander grading, in lexicographic
    order; rectangles never leave the summand so every target is found there.
    """
    keys = state_keys(states)
    src, tkey = rectangle_arrays(g, states)
    dst = locate(keys, tkey)
    src, dst = arrows_mod2(src, dst, len(states))

    columns_by_m: dict[int, list[set]] = defaultdict(list)
    if len(src):
        order = np.argsort(src, kind="stable")
        src, dst = src[order], dst[order]
        cuts = np.flatnonzero(np.diff(src)) + 1
        starts = np.concatenate([[0], cuts])
        for start, block in zip(starts.tolist(), np.split(dst, cuts)):
            columns_by_m[int(maslov[src[start]])].append(set(block.tolist()))

    counts = dict(zip(*(v.tolist() for v in np.unique(maslov, return_counts=True))))
    ranks = {m: sparse_rank(cols) for m, cols in columns_by_m.items()}
    dims = {}
    for m, count in counts.items():
        d = count - ranks.get(m, 0) - ranks.get(m + 1, 0)
        if d:
            dims[m] = d
    return dims


def _bucket_task(args):
    g, a, states, maslov = args
    return a, bucket_homology(g, states, maslov)


def graded_homology(g: GridDiagram, workers: int | None = None) -> BigradedDimensions:
    """Tilde grid homology of a knot grid, as bigraded dimensions.

    ``workers=1`` runs every summand in this process; larger values spread the
    Alexander summands over a process pool.  The result does not depend on it.
    """
    if workers is None:
        workers = default_workers()
    buckets = alexander_buckets(g)
    # Largest summands first so the pool stays busy.
    tasks = sorted(
        ((g, a, st, mo) for a, (st, mo) in buckets.items()),
        key=lambda t: -len(t[2]),
    )
    results = {}
    # A pool costs more to start than a grid of size <= 6 takes to finish.
    if workers <= 1 or len(tasks) <= 1 or g.n <= 6:
        for t in tasks:
            a, dims = _bucket_task(t)
            results[a] = dims
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
            for a, dims in pool.map(_bucket_task, tasks):
                results[a] = dims
    return BigradedDimensions(
        ((m, a), d) for a, dims in results.items() for m, d in dims.items()
    )
