"""Knot invariants read off from grid homology.

Tilde grid homology of a size-``n`` grid is HFK-hat tensored with ``n-1``
copies of a two-dimensional space ``V`` with generators in bigradings
``(0, 0)`` and ``(-1, -1)``.  :func:`divide_v_factor` strips those copies;
everything after that works on HFK-hat alone.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping

from .errors import EmptyHomology, NormalizationFailed, NotDivisible
from .grid import GridDiagram
from .homology import BigradedDimensions, graded_homology


class LaurentPolynomial:
    """Integer Laurent polynomial in ``t`` stored as ``{exponent: coefficient}``."""

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {int(e): int(c) for e, c in sorted((coeffs or {}).items()) if c}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentPolynomial({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, t):
        if isinstance(t, int):
            t = Fraction(t)
        return sum(c * t ** e for e, c in self.coeffs.items())

    def shift(self, k: int) -> "LaurentPolynomial":
        return LaurentPolynomial({e + k: c for e, c in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def min_degree(self) -> int:
        return min(self.coeffs)

    @property
    def max_degree(self) -> int:
        return max(self.coeffs)

    def is_symmetric(self) -> bool:
        return all(self.coeffs.get(-e) == c for e, c in self.coeffs.items())

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self.coeffs.items()}

    def __repr__(self):
        return f"LaurentPolynomial({self.coeffs})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def v_power(k: int) -> BigradedDimensions:
    """Poincare data of ``V`` tensored with itself ``k`` times."""
    return BigradedDimensions({(-i, -i): comb(k, i) for i in range(k + 1)})


def tensor(h: Mapping, other: Mapping) -> BigradedDimensions:
    out: dict[tuple[int, int], int] = {}
    for (m1, a1), d1 in h.items():
        for (m2, a2), d2 in other.items():
            key = (m1 + m2, a1 + a2)
            out[key] = out.get(key, 0) + d1 * d2
    return BigradedDimensions(out)


def divide_v_factor(gh: Mapping, n: int) -> BigradedDimensions:
    """Exact quotient of ``gh`` by ``V`` to the power ``n-1``.

    Peels off the lexicographically largest bigrading each round: its
    coefficient has to be a coefficient of the quotient.  Raises NotDivisible
    if anything is left over or goes negative.
    """
    k = n - 1
    rest = {key: d for key, d in gh.items() if d}
    quotient = {}
    while rest:
        top = max(rest)
        c = rest[top]
        quotient[top] = c
        m, a = top
        for i in range(k + 1):
            key = (m - i, a - i)
            left = rest.get(key, 0) - c * comb(k, i)
            if left < 0:
                raise NotDivisible(f"grid homology is not divisible by V^{k}: negative remainder at {key}")
            if left:
                rest[key] = left
            else:
                rest.pop(key, None)
    return BigradedDimensions(quotient)


def euler_characteristic(h: Mapping) -> LaurentPolynomial:
    """``sum (-1)^m t^a dim`` over the bigradings of ``h``."""
    out: dict[int, int] = {}
    for (m, a), d in h.items():
        out[a] = out.get(a, 0) + (-1) ** (m % 2) * d
    return LaurentPolynomial(out)


def alexander_polynomial(hfk: Mapping) -> LaurentPolynomial:
    """Conway-normalised Alexander polynomial from HFK-hat.

    The graded Euler characteristic is flipped in sign if it evaluates to -1
    at ``t = 1`` and shifted so its exponents are centred on zero.  The raw
    characteristic is :func:`euler_characteristic`.
    """
    raw = euler_characteristic(hfk)
    at_one = sum(raw.coeffs.values())
    if at_one not in (1, -1):
        raise NormalizationFailed(f"Euler characteristic evaluates to {at_one} at t=1")
    poly = raw * at_one
    span = poly.min_degree + poly.max_degree
    if span % 2:
        raise NormalizationFailed(f"exponents {poly.min_degree}..{poly.max_degree} cannot be centred")
    return poly.shift(-span // 2)


def genus(hfk: Mapping) -> int:
    if not hfk:
        raise EmptyHomology("HFK-hat is never zero; the pipeline lost it")
    return max(a for (_, a) in hfk)


def top_dimension(hfk: Mapping) -> int:
    """Total dimension of HFK-hat in the top Alexander grading."""
    g = genus(hfk)
    return sum(d for (_, a), d in hfk.items() if a == g)


def is_fibered(hfk: Mapping) -> bool:
    return top_dimension(hfk) == 1


def check_symmetry(hfk: Mapping) -> bool:
    """``dim(m, a) == dim(m - 2a, -a)`` everywhere."""
    return all(hfk.get((m - 2 * a, -a), 0) == d for (m, a), d in hfk.items())


def check_vanishing(hfk: Mapping) -> bool:
    """HFK-hat is supported in ``|a| <= genus``."""
    g = genus(hfk)
    return all(abs(a) <= g for (_, a) in hfk)


@dataclass
class KnotReport:
    grid: GridDiagram
    gh_tilde: BigradedDimensions
    hfk: BigradedDimensions
    alexander: LaurentPolynomial
    alexander_raw: LaurentPolynomial
    genus: int
    fibered: bool
    symmetric: bool
    vanishing_ok: bool
    timings: dict[str, float] = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        # Timings are left out so that output is reproducible byte for byte.
        return {
            "grid": self.grid.to_dict(),
            "gh_tilde": self.gh_tilde.as_rows(),
            "hfk": self.hfk.as_rows(),
            "alexander": self.alexander.to_json(),
            "genus": self.genus,
            "fibered": self.fibered,
            "symmetric": self.symmetric,
        }

    def to_json(self) -> str:
        """One top-level key per line, compact values, keys in a fixed order."""
        body = ",\n".join(
            f"  {json.dumps(k)}: {json.dumps(v, separators=(', ', ': '))}" for k, v in self.to_dict().items()
        )
        return "{\n" + body + "\n}\n"


def full_report(g: GridDiagram, workers: int | None = None) -> KnotReport:
    t0 = time.perf_counter()
    gh = graded_homology(g, workers=workers)
    t1 = time.perf_counter()
    hfk = divide_v_factor(gh, g.n)
    report = KnotReport(
        grid=g,
        gh_tilde=gh,
        hfk=hfk,
        alexander=alexander_polynomial(hfk),
        alexander_raw=euler_characteristic(hfk),
        genus=genus(hfk),
        fibered=is_fibered(hfk),
        symmetric=check_symmetry(hfk),
        vanishing_ok=check_vanishing(hfk),
    )
    report.timings = {"homology": t1 - t0, "invariants": time.perf_counter() - t1}
    return report
