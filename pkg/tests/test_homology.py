import numpy as np
import pytest
from hypothesis import given, settings

from gridfloer.errors import NotAKnot, OracleTooLarge
from gridfloer.grid import translate, transpose, validate
from gridfloer.homology import BigradedDimensions, default_workers, graded_homology
from gridfloer.library import builtin
from gridfloer.oracle import dense_homology, dense_total_dimension

from conftest import grids

# Frozen from gridfloer.oracle.dense_homology (brute-force rectangles, one dense matrix).
TREFOIL_GH = {(2, 1): 1, (1, 0): 5, (0, -1): 11, (-1, -2): 14, (-2, -3): 11, (-3, -4): 5, (-4, -5): 1}
FIGURE8_GH = {(1, 1): 1, (0, 0): 8, (-1, -1): 26, (-2, -2): 45, (-3, -3): 45, (-4, -4): 26, (-5, -5): 8, (-6, -6): 1}


def test_unknot(unknot2):
    gh = graded_homology(unknot2, workers=1)
    assert gh == {(0, 0): 1, (-1, -1): 1}
    assert gh.total() == 2


def test_trefoil_frozen(trefoil):
    gh = graded_homology(trefoil, workers=1)
    assert gh == TREFOIL_GH
    assert gh.total() == 3 * 2**4
    assert gh.by_alexander() == {1: 1, 0: 5, -1: 11, -2: 14, -3: 11, -4: 5, -5: 1}


def test_trefoil_oracle_agrees(trefoil):
    assert dense_homology(trefoil) == TREFOIL_GH


def test_figure8(figure8):
    gh = graded_homology(figure8, workers=1)
    assert gh == FIGURE8_GH
    assert gh.total() == 5 * 2 ** (figure8.n - 1)


def test_links_rejected():
    link = validate(4, [1, 0, 3, 2], [0, 1, 2, 3])
    with pytest.raises(NotAKnot):
        graded_homology(link)
    with pytest.raises(NotAKnot):
        dense_homology(link)


def test_oracle_refuses_large():
    with pytest.raises(OracleTooLarge):
        dense_homology(builtin("torus_2_5"))


@settings(max_examples=20)
@given(grids(min_n=2, max_n=5, knots_only=True))
def test_bucketed_matches_dense_oracle(g):
    gh = graded_homology(g, workers=1)
    assert gh.total() == dense_total_dimension(g)
    assert gh == dense_homology(g)


@given(grids(min_n=2, max_n=6, knots_only=True))
def test_translate_and_transpose_invariance(g):
    gh = graded_homology(g, workers=1)
    assert graded_homology(transpose(g), workers=1) == gh
    assert graded_homology(translate(g, 1, 0), workers=1) == gh
    assert graded_homology(translate(g, 2, g.n - 1), workers=1) == gh


def test_workers_do_not_change_result():
    g = builtin("knot5_2")
    assert graded_homology(g, workers=1) == graded_homology(g, workers=3)


def test_workers_env(monkeypatch):
    monkeypatch.setenv("GRIDFLOER_WORKERS", "3")
    assert default_workers() == 3
    monkeypatch.delenv("GRIDFLOER_WORKERS")
    assert default_workers() >= 1


def test_bigraded_dimensions_container():
    h = BigradedDimensions({(0, 0): 1, (1, 1): 0, (-1, -1): 2})
    assert dict(h) == {(-1, -1): 2, (0, 0): 1}
    assert h.total() == 3
    assert h.get((5, 5)) == 0
    assert h.as_rows() == [[0, 0, 1], [-1, -1, 2]]
    assert h == {(0, 0): 1, (-1, -1): 2, (3, 3): 0}
    with pytest.raises(ValueError):
        BigradedDimensions({(0, 0): -1})
