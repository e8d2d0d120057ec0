"""Empty rectangles and the boundary maps of the tilde grid complex.

A rectangle from state ``s`` starts at the point of ``s`` in column ``i`` (its
lower-left corner) and runs rightwards on the torus to column ``j``, and
upwards from row ``s[i]`` to row ``s[j]`` (its upper-right corner).  It
ends at the state that swaps ``s[i]`` and ``s[j]``.  It counts when its open
interior holds no point of ``s`` and no O or X marker.

Heights are measured relative to ``s[i]``: a rectangle of height ``h`` covers
the cells with relative row ``0..h-1``.  Sweeping ``j`` to the right while
keeping the smallest blocking height seen so far gives every empty rectangle
out of column ``i`` in one pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BucketGradingMismatch
from .gf2 import GF2Matrix
from .gradings import GridState, all_states, maslov_array, state_keys
from .grid import GridDiagram


@dataclass(frozen=True, order=True)
class Rectangle:
    c1: int  # column of the lower-left corner
    c2: int  # column of the upper-right corner
    row_lo: int
    row_hi: int

    @property
    def wraps_columns(self) -> bool:
        return self.c2 < self.c1

    @property
    def wraps_rows(self) -> bool:
        return self.row_hi < self.row_lo

    def width(self, n: int) -> int:
        return (self.c2 - self.c1) % n

    def height(self, n: int) -> int:
        return (self.row_hi - self.row_lo) % n


def empty_rectangles_from(g: GridDiagram, s: Sequence[int]) -> list[tuple[GridState, Rectangle]]:
    """All empty rectangles out of ``s``, sorted by target state then rectangle."""
    n = g.n
    s = tuple(s)
    out = []
    for i in range(n):
        base = s[i]
        limit = n
        for k in range(1, n):
            c = (i + k - 1) % n
            limit = min(limit, (g.o[c] - base) % n, (g.x[c] - base) % n)
            if k > 1:
                limit = min(limit, (s[c] - base) % n)
            if limit <= 0:
                break
            j = (i + k) % n
            if (s[j] - base) % n <= limit:
                t = list(s)
                t[i], t[j] = s[j], s[i]
                out.append((GridState(t), Rectangle(i, j, s[i], s[j])))
    out.sort()
    return out


def rectangle_arrays(g: GridDiagram, states: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Every empty rectangle out of every row of ``states``.

    Returns ``(src, target_key)``: the row index of the source state and the
    :func:`state_keys` encoding of the target.  Rectangles are not reduced
    mod 2 here.
    """
    n = g.n
    if len(states) == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    s = states.astype(np.int16)
    keys = state_keys(states)
    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    o = np.asarray(g.o, dtype=np.int16)
    x = np.asarray(g.x, dtype=np.int16)
    srcs = []
    tkeys = []
    for i in range(n):
        base = s[:, i]
        limit = np.full(len(s), n, dtype=np.int16)
        for k in range(1, n):
            c = (i + k - 1) % n
            np.minimum(limit, (o[c] - base) % n, out=limit)
            np.minimum(limit, (x[c] - base) % n, out=limit)
            if k > 1:
                np.minimum(limit, (s[:, c] - base) % n, out=limit)
            j = (i + k) % n
            hit = np.flatnonzero((s[:, j] - base) % n <= limit)
            if len(hit):
                delta = (s[hit, j] - s[hit, i]).astype(np.int64)
                srcs.append(hit)
                tkeys.append(keys[hit] + delta * (weights[i] - weights[j]))
    if not srcs:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(srcs).astype(np.int64), np.concatenate(tkeys)


def arrows_mod2(src: np.ndarray, dst: np.ndarray, n_targets: int) -> tuple[np.ndarray, np.ndarray]:
    """Drop source/target pairs joined by an even number of rectangles."""
    if len(src) == 0:
        return src, dst
    code = src * np.int64(n_targets) + dst
    uniq, counts = np.unique(code, return_counts=True)
    odd = uniq[counts % 2 == 1]
    return odd // n_targets, odd % n_targets


def locate(keys: np.ndarray, wanted: np.ndarray) -> np.ndarray:
    """Indices of ``wanted`` in the sorted array ``keys``; every one must be present."""
    idx = np.searchsorted(keys, wanted)
    idx = np.minimum(idx, len(keys) - 1) if len(keys) else idx
    if len(wanted) and (len(keys) == 0 or not np.array_equal(keys[idx], wanted)):
        raise KeyError("target state missing from the target bucket")
    return idx


def grading_labels(g: GridDiagram, states: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Maslov grading and twice the Alexander grading of each state.

    Unlike :func:`gradings.gradings_array` this accepts links, whose Alexander
    grading may be a half-integer; the differential preserves it all the same.
    """
    mo = maslov_array(g, states, "O")
    mx = maslov_array(g, states, "X")
    return mo, mo - mx - (g.n - 1)


def boundary_matrix(g: GridDiagram, source_bucket, target_bucket) -> GF2Matrix:
    """Matrix of the differential from one bigrading to the next.

    Rows are indexed by ``target_bucket``, columns by ``source_bucket``.  Every
    source must share one bigrading ``(m, a)`` and every target ``(m-1, a)``.
    Links are accepted; see :func:`grading_labels`.  Entries are rectangle
    counts mod 2.
    """
    src_states = np.asarray(list(source_bucket), dtype=np.int8).reshape(-1, g.n)
    dst_states = np.asarray(list(target_bucket), dtype=np.int8).reshape(-1, g.n)
    n_src, n_dst = len(src_states), len(dst_states)
    if n_src == 0 or n_dst == 0:
        return GF2Matrix.zeros(n_dst, n_src)

    mo_s, a_s = grading_labels(g, src_states)
    mo_t, a_t = grading_labels(g, dst_states)
    m, a2 = int(mo_s[0]), int(a_s[0])
    shown = (m, a2 / 2)
    if np.any(mo_s != m) or np.any(a_s != a2):
        raise BucketGradingMismatch(f"source bucket is not concentrated in one bigrading (first state has {shown})")
    if np.any(mo_t != m - 1) or np.any(a_t != a2):
        raise BucketGradingMismatch(f"target bucket is not concentrated in bigrading {(m - 1, a2 / 2)}")

    order = np.argsort(state_keys(dst_states), kind="stable")
    sorted_keys = state_keys(dst_states)[order]
    src, tkey = rectangle_arrays(g, src_states)
    # Targets outside the given bucket are dropped, so partial buckets give submatrices.
    pos = np.minimum(np.searchsorted(sorted_keys, tkey), n_dst - 1)
    present = sorted_keys[pos] == tkey
    src, dst = src[present], order[pos[present]]
    return GF2Matrix.from_entries(n_dst, n_src, zip(dst.tolist(), src.tolist()))


def bucket_states(g: GridDiagram) -> dict[tuple[int, int], np.ndarray]:
    """All states grouped by ``(maslov, 2 * alexander)``, each group in lexicographic order."""
    states = all_states(g.n)
    mo, alex = grading_labels(g, states)
    order = np.lexsort((np.arange(len(states)), alex, mo))
    out = {}
    bounds = np.flatnonzero(np.diff(mo[order]) | np.diff(alex[order])) + 1
    for chunk in np.split(order, bounds):
        if len(chunk):
            out[(int(mo[chunk[0]]), int(alex[chunk[0]]))] = states[np.sort(chunk)]
    return out


@dataclass
class DSquaredReport:
    ok: bool
    compositions: int
    # (maslov, 2 * alexander) of the source of the first nonzero composite
    failure: tuple[int, int] | None = None

    def __bool__(self):
        return self.ok


def verify_d_squared(g: GridDiagram) -> DSquaredReport:
    """Compose consecutive boundary maps in every Alexander grading and check they vanish."""
    buckets = bucket_states(g)
    checked = 0
    for (m, a) in sorted(buckets):
        mid = buckets.get((m - 1, a))
        low = buckets.get((m - 2, a))
        if mid is None or low is None:
            continue
        first = boundary_matrix(g, buckets[(m, a)], mid)
        second = boundary_matrix(g, mid, low)
        checked += 1
        if not (second @ first).is_zero():
            return DSquaredReport(False, checked, (m, a))
    return DSquaredReport(True, checked)
