"""Acceptance criteria, one test each. Run with ``pytest tests/test_acceptance.py -s`` to see the verdict lines."""

import random
import time

import numpy as np
import pytest

from gridfloer.differential import verify_d_squared
from gridfloer.homology import default_workers, graded_homology
from gridfloer.invariants import (
    LaurentPolynomial,
    alexander_polynomial,
    check_symmetry,
    check_vanishing,
    divide_v_factor,
    full_report,
    genus,
    is_fibered,
    top_dimension,
)
from gridfloer.library import ROUTINE, builtin, names
from gridfloer.moves import random_sequence
from gridfloer.oracle import dense_homology

from conftest import random_grid

# wall-clock limits in seconds
LIMIT_FIGURE8 = 30
LIMIT_TREFOIL_T25 = 10
LIMIT_DSQ = 60
LIMIT_MOVES = 300
LIMIT_N9 = 120

MOVE_SEQUENCES = 20
MOVE_LENGTH = 5
MOVE_MAX_N = 9
RANDOM_DSQ_GRIDS = 100


def verdict(number, ok, detail):
    print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
    assert ok, detail


def hfk_of(g, workers=1):
    return divide_v_factor(graded_homology(g, workers=workers), g.n)


def test_criterion_01_figure8_total():
    g = builtin("figure8")
    t0 = time.perf_counter()
    total = hfk_of(g).total()
    dt = time.perf_counter() - t0
    verdict(1, total == 5 and g.n <= 7 and dt < LIMIT_FIGURE8, f"figure-eight HFK total {total} (want 5), n={g.n}, {dt:.2f}s")


def test_criterion_02_unknot():
    g = builtin("unknot2")
    gh = graded_homology(g, workers=1)
    hfk = divide_v_factor(gh, g.n)
    ok = gh == {(0, 0): 1, (-1, -1): 1} and hfk == {(0, 0): 1} and genus(hfk) == 0 and is_fibered(hfk)
    verdict(2, ok, f"unknot GH~ {dict(gh)}, HFK {dict(hfk)}, genus {genus(hfk)}, fibered {is_fibered(hfk)}")


def test_criterion_03_extra_sutures():
    t2 = graded_homology(builtin("unknot2"), workers=1).total()
    t3 = graded_homology(builtin("unknot3"), workers=1).total()
    verdict(3, (t2, t3) == (2, 4), f"unknot GH~ totals n=2: {t2} (want 2), n=3: {t3} (want 4)")


def test_criterion_04_trefoil_and_t25():
    t0 = time.perf_counter()
    tre = full_report(builtin("trefoil"), workers=1)
    t25 = full_report(builtin("torus_2_5"), workers=1)
    dt = time.perf_counter() - t0
    delta = LaurentPolynomial({1: 1, 0: -1, -1: 1})
    ok = tre.genus == 1 and tre.fibered and tre.alexander == delta
    ok = ok and t25.genus == 2 and t25.fibered
    # independent dense path, at every size it accepts
    for name in ("trefoil", "torus_2_5"):
        g = builtin(name)
        if g.n <= 6:
            dense = divide_v_factor(dense_homology(g), g.n)
            rep = tre if name == "trefoil" else t25
            ok = ok and dense == rep.hfk and alexander_polynomial(dense) == rep.alexander
    ok = ok and dt < LIMIT_TREFOIL_T25
    verdict(
        4,
        ok,
        f"trefoil genus {tre.genus} fibered {tre.fibered} Delta {tre.alexander}; "
        f"T(2,5) genus {t25.genus} fibered {t25.fibered}; {dt:.2f}s",
    )


def test_criterion_05_d_squared():
    t0 = time.perf_counter()
    bad = [name for name in names() if not verify_d_squared(builtin(name)).ok]
    rng = np.random.default_rng(5)
    for k in range(RANDOM_DSQ_GRIDS):
        g = random_grid(rng, int(rng.integers(2, 7)))
        if not verify_d_squared(g).ok:
            bad.append(f"random#{k} {g.o}/{g.x}")
    dt = time.perf_counter() - t0
    verdict(5, not bad and dt < LIMIT_DSQ, f"d^2=0 on {len(names())} library + {RANDOM_DSQ_GRIDS} random grids, failures {bad}, {dt:.2f}s")


def test_criterion_06_v_divisibility():
    # divide_v_factor raises NotDivisible on any remainder
    done = []
    for name in names():
        g = builtin(name)
        divide_v_factor(graded_homology(g), g.n)
        done.append(name)
    verdict(6, done == list(names()), f"exact division by V^(n-1) for {', '.join(done)}")


def test_criterion_07_symmetry_vanishing():
    bad = []
    for name in names():
        hfk = hfk_of(builtin(name), workers=None)
        if not (check_symmetry(hfk) and check_vanishing(hfk)):
            bad.append(name)
    verdict(7, not bad, f"symmetry and vanishing for {len(names())} library knots, failures {bad}")


def test_criterion_08_move_invariance():
    rng = random.Random(8)
    weights = {"destabilize": 0}
    t0 = time.perf_counter()
    bad, sizes = [], []
    for name in ("trefoil", "figure8"):
        base_grid = builtin(name)
        base = hfk_of(base_grid)
        for k in range(MOVE_SEQUENCES):
            g, records = random_sequence(base_grid, rng, rng.randint(1, MOVE_LENGTH), max_n=MOVE_MAX_N, weights=weights)
            sizes.append(g.n)
            if hfk_of(g, workers=None) != base:
                bad.append((name, k, [(r.kind, r.args) for r in records]))
    dt = time.perf_counter() - t0
    verdict(
        8,
        not bad and max(sizes) <= MOVE_MAX_N and dt < LIMIT_MOVES,
        f"{len(sizes)} move sequences, max n {max(sizes)}, mismatches {bad}, {dt:.1f}s",
    )


def test_criterion_09_non_fibered():
    hfk = hfk_of(builtin("knot5_2"))
    top = top_dimension(hfk)
    verdict(9, top == 2 and not is_fibered(hfk), f"5_2 top-grading dimension {top}, fibered {is_fibered(hfk)}")


@pytest.mark.slow
def test_criterion_10_performance_and_determinism():
    g = builtin("torus_2_7")
    t0 = time.perf_counter()
    rep = full_report(g)
    dt = time.perf_counter() - t0
    first = rep.to_json()
    others = {full_report(g, workers=w).to_json() for w in (1, 2)}
    ok = g.n == 9 and dt < LIMIT_N9 and others == {first} and rep.genus == 3
    verdict(
        10,
        ok,
        f"n=9 full pipeline {dt:.1f}s with {default_workers()} default worker(s), "
        f"JSON identical across worker counts: {others == {first}}",
    )
