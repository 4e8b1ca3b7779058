"""Polynomial arithmetic and generating-function reconstruction."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isogrid.errors import RecurrenceTailError
from isogrid.genfunc import (
    DENOMINATOR,
    GenFunction,
    expand_gf,
    fixture_table_length,
    load_fixture_numerators,
    match_tables,
    numerator_from_sequence,
    poly_add,
    poly_divides,
    poly_divmod,
    poly_mul,
    poly_normalize,
)
from isogrid.sequences import SequenceTable, build_table

polys = st.lists(st.integers(-9, 9), max_size=8).map(poly_normalize)


def test_poly_mul_basics():
    assert poly_mul([-1, 1], [1, 1]) == [-1, 0, 1]  # (x-1)(x+1)
    assert poly_mul([5], []) == []
    cubed = poly_mul(poly_mul([-1, 1], [-1, 1]), [-1, 1])
    assert poly_mul(cubed, [1, 1]) == DENOMINATOR  # (x-1)^3 (x+1)


@given(polys, polys, polys)
@settings(max_examples=150)
def test_poly_ring_properties(a, b, c):
    assert poly_mul(a, b) == poly_mul(b, a)
    assert poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c))


@given(polys, polys.filter(lambda p: p and abs(p[-1]) == 1))
@settings(max_examples=150)
def test_poly_divmod_roundtrip(a, b):
    q, r = poly_divmod(a, b)
    assert poly_add(poly_mul(q, b), r) == a
    assert len(r) < len(b)


def test_numerator_from_sequence_n2():
    table = build_table(2, 13)
    assert numerator_from_sequence(table, "iso") == [0, -4, -2, 4]
    assert numerator_from_sequence(table, "obtuse") == [0, 0, 0, 0, -2]
    assert numerator_from_sequence(table, "acute") == []


def test_numerator_rejects_non_recurrent_sequence():
    from isogrid.census import CensusCounts

    rows = tuple(CensusCounts(k * k * k, k * k * k, 0, 0) for k in range(1, 14))
    with pytest.raises(RecurrenceTailError):
        numerator_from_sequence(SequenceTable(2, rows), "iso")


def test_expand_gf_round_trips_n2():
    table = build_table(2, 13)
    gf = GenFunction(numerator_from_sequence(table, "iso"))
    assert expand_gf(gf, 5) == [0, 4, 10, 16, 24]
    assert expand_gf(GenFunction([]), 5) == [0, 0, 0, 0, 0]
    gf_obtuse = GenFunction(numerator_from_sequence(table, "obtuse"))
    assert expand_gf(gf_obtuse, 5) == [0, 0, 0, 0, 2]


@pytest.mark.parametrize("n", range(2, 7))
def test_round_trip_all_classes(n):
    table = build_table(n, fixture_table_length(n))
    for cls in ("iso", "acute", "right", "obtuse"):
        gf = GenFunction(numerator_from_sequence(table, cls))
        assert expand_gf(gf, table.k_max) == table.column(cls)


@pytest.mark.parametrize("n", range(2, 7))
def test_match_fixture_tables(n):
    table = build_table(n, fixture_table_length(n))
    for cls, result in match_tables(table).items():
        assert result.passed, (n, cls, result.diffs())


def test_fixture_class_sums_and_reduced_denominators():
    fixtures = load_fixture_numerators()
    for n in range(2, 9):
        total = poly_add(
            poly_add(fixtures[(n, "acute")], fixtures[(n, "right")]),
            fixtures[(n, "obtuse")],
        )
        assert total == fixtures[(n, "iso")]
        # acute GF reduces to denominator (x-1)^3; right to (x-1)^2
        assert poly_divides([1, 1], fixtures[(n, "acute")])
        assert poly_divides(poly_mul([-1, 1], [1, 1]), fixtures[(n, "right")])


def test_degree_bound():
    fixtures = load_fixture_numerators()
    for n in range(2, 9):
        K = (n - 1) ** 2 + (3 if n % 2 == 0 else 2)
        assert len(fixtures[(n, "iso")]) - 1 <= K + 4
