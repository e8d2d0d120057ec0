import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gridfloer.grid import GridDiagram, is_knot, validate
from gridfloer.library import builtin

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")


@st.composite
def grids(draw, min_n=2, max_n=5, knots_only=False):
    """Valid grid diagrams; with ``knots_only`` the grid must have one component."""
    n = draw(st.integers(min_n, max_n))
    o = draw(st.permutations(range(n)))
    x = draw(st.permutations(range(n)).filter(lambda p: all(a != b for a, b in zip(o, p))))
    g = GridDiagram(n, tuple(o), tuple(x))
    if knots_only:
        from hypothesis import assume

        assume(is_knot(g))
    return g


def random_grid(rng: np.random.Generator, n: int) -> GridDiagram:
    while True:
        o = rng.permutation(n)
        x = rng.permutation(n)
        if np.all(o != x):
            return GridDiagram(n, tuple(o), tuple(x))


@pytest.fixture
def unknot2():
    return validate(2, [1, 0], [0, 1])


@pytest.fixture
def trefoil():
    return builtin("trefoil")


@pytest.fixture
def figure8():
    return builtin("figure8")
