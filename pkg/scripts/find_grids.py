"""Random search for small knot grids with a prescribed Alexander polynomial.

The graded Euler characteristic of the grid complex is
``Delta(t) * (1 - t^-1)^(n-1)`` and needs no homology, so candidate grids are
cheap to screen.  At the minimal grid size the polynomial pins down the knot:
arc index 6 is only realised by the figure-eight among knots with
``Delta = -t + 3 - t^-1``, and the same goes for 5_2 at arc index 7.

    python scripts/find_grids.py figure8
    python scripts/find_grids.py knot5_2 --seed 3
"""

import argparse

import numpy as np

from gridfloer.gradings import all_states, gradings_array
from gridfloer.grid import GridDiagram, is_knot
from gridfloer.invariants import LaurentPolynomial

TARGETS = {
    "figure8": (6, LaurentPolynomial({-1: -1, 0: 3, 1: -1})),
    "knot5_2": (7, LaurentPolynomial({-1: 2, 0: -3, 1: 2})),
    "trefoil": (5, LaurentPolynomial({-1: 1, 0: -1, 1: 1})),
}


def grid_euler(g, states):
    mo, alex = gradings_array(g, states)
    signs = 1 - 2 * (mo % 2)
    coeffs = {}
    for a in np.unique(alex):
        coeffs[int(a)] = int(signs[alex == a].sum())
    return LaurentPolynomial(coeffs)


def search(name, seed, tries):
    n, delta = TARGETS[name]
    expected = delta * LaurentPolynomial({0: 1, -1: -1}) ** (n - 1)
    rng = np.random.default_rng(seed)
    states = all_states(n)
    for attempt in range(tries):
        o = rng.permutation(n)
        x = rng.permutation(n)
        if np.any(o == x):
            continue
        g = GridDiagram(n, tuple(o), tuple(x))
        if not is_knot(g):
            continue
        chi = grid_euler(g, states)
        if chi == expected or chi == -expected:
            return attempt, g
    return None, None


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("name", choices=sorted(TARGETS))
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tries", type=int, default=200_000)
    args = ap.parse_args()
    attempt, g = search(args.name, args.seed, args.tries)
    if g is None:
        raise SystemExit(f"nothing found in {args.tries} tries")
    print(f"# found after {attempt + 1} tries (seed {args.seed})")
    print(f"grid {g.n}\nO {' '.join(map(str, g.o))}\nX {' '.join(map(str, g.x))}")


if __name__ == "__main__":
    main()
