"""Classification kernel: known triples, symmetry properties, and a
float cross-check that is test-only scaffolding."""
import math
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isogrid.errors import InvalidTripleError
from isogrid.geometry import (
    GridDims,
    TriangleKind,
    classify,
    cross,
    squared_distance,
)

points = st.tuples(st.integers(-50, 50), st.integers(-50, 50))


def distinct_triples():
    return st.tuples(points, points, points).filter(
        lambda t: t[0] != t[1] and t[0] != t[2] and t[1] != t[2]
    )


def test_squared_distance_known_values():
    assert squared_distance((0, 0), (0, 0)) == 0
    assert squared_distance((0, 0), (1, 1)) == 2
    assert squared_distance((0, 0), (1, 2)) == 5


def test_classify_known_triples():
    shape = classify((0, 0), (0, 1), (1, 0))
    assert shape.kind is TriangleKind.RIGHT and shape.isosceles

    shape = classify((0, 0), (0, 2), (0, 5))
    assert shape.kind is TriangleKind.DEGENERATE and not shape.isosceles

    # sides^2 are 5, 5, 16 and 5 + 5 < 16
    shape = classify((0, 0), (1, 2), (0, 4))
    assert shape.kind is TriangleKind.OBTUSE and shape.isosceles


def test_classify_rejects_duplicates():
    with pytest.raises(InvalidTripleError):
        classify((0, 0), (0, 0), (1, 1))


@given(distinct_triples())
@settings(max_examples=200)
def test_classify_permutation_invariant(triple):
    shapes = {classify(*perm) for perm in permutations(triple)}
    assert len(shapes) == 1


@given(distinct_triples(), st.integers(-20, 20), st.integers(-20, 20))
@settings(max_examples=200)
def test_classify_translation_and_symmetry_invariant(triple, dr, dc):
    base = classify(*triple)
    translated = [(r + dr, c + dc) for r, c in triple]
    reflected = [(-r, c) for r, c in triple]
    rotated = [(-c, r) for r, c in triple]
    assert classify(*translated) == base
    assert classify(*reflected) == base
    assert classify(*rotated) == base


def test_no_equilateral_lattice_triangles():
    for rows in range(1, 26):
        for cols in range(1, 26 // rows + 1):
            pts = GridDims(rows, cols).points()
            for p, q, r in combinations(pts, 3):
                if cross(p, q, r) == 0:
                    continue
                s = sorted(
                    (squared_distance(p, q), squared_distance(p, r), squared_distance(q, r))
                )
                assert not (s[0] == s[1] == s[2]), (p, q, r)


def _float_classify(p, q, r):
    """Law-of-cosines classifier used only to cross-check the exact one."""
    sides = sorted(
        math.dist(p, q) for p, q in ((p, q), (p, r), (q, r))
    )
    area2 = abs(cross(p, q, r))
    if area2 == 0:
        return TriangleKind.DEGENERATE
    cos_big = (sides[0] ** 2 + sides[1] ** 2 - sides[2] ** 2) / (2 * sides[0] * sides[1])
    if abs(cos_big) < 1e-9:
        return TriangleKind.RIGHT
    return TriangleKind.ACUTE if cos_big > 0 else TriangleKind.OBTUSE


def test_classify_matches_float_classifier_small_grids():
    for rows in range(1, 7):
        for cols in range(rows, 7):
            for p, q, r in combinations(GridDims(rows, cols).points(), 3):
                assert classify(p, q, r).kind is _float_classify(p, q, r)
