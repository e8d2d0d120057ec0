"""Combinatorial knot Floer homology from toroidal grid diagrams."""

from .errors import *  # noqa: F401,F403
from .grid import (
    GridDiagram,
    MoveRecord,
    commute_columns,
    component_count,
    destabilize,
    parse,
    serialize,
    stabilize,
    translate,
    transpose,
    validate,
)
from .homology import BigradedDimensions, graded_homology
from .invariants import (
    KnotReport,
    LaurentPolynomial,
    alexander_polynomial,
    check_symmetry,
    divide_v_factor,
    full_report,
    genus,
    is_fibered,
)

__version__ = "0.1.0"
