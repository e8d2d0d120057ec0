"""Time the full pipeline on the n=9 library grid, optionally also on a random n=10 knot grid."""

import argparse
import time

import numpy as np

from gridfloer.grid import is_knot, validate
from gridfloer.invariants import full_report
from gridfloer.library import builtin


def random_knot(n, seed):
    rng = np.random.default_rng(seed)
    while True:
        o = rng.permutation(n)
        x = rng.permutation(n)
        if np.any(o == x):
            continue
        g = validate(n, o.tolist(), x.tolist())
        if is_knot(g):
            return g


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--workers", type=int, default=None)
    ap.add_argument("--n10", action="store_true", help="also run a random 10x10 knot grid (slow)")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    grids = [("torus_2_7", builtin("torus_2_7"))]
    if args.n10:
        grids.append(("random n=10", random_knot(10, args.seed)))
    for label, g in grids:
        t0 = time.perf_counter()
        rep = full_report(g, workers=args.workers)
        dt = time.perf_counter() - t0
        print(f"{label}: n={g.n} genus={rep.genus} fibered={rep.fibered} HFK total={rep.hfk.total()} in {dt:.1f}s")


if __name__ == "__main__":
    main()
