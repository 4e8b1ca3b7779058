"""Exact counting, recurrence verification, and maximum isosceles-free
point-set search for rectangular integer grids."""

from .census import CensusCounts, apex_census, brute_force_census, census_row
from .constellation import (
    Constellation,
    ConstellationResult,
    build_fig_constellation,
    is_isosceles_free,
    max_isosceles_free,
)
from .geometry import GridDims, TriangleKind, TriangleShape, classify, squared_distance
from .sequences import SequenceTable, build_table, check_recurrence, optimal_K

__all__ = [
    "CensusCounts",
    "Constellation",
    "ConstellationResult",
    "GridDims",
    "SequenceTable",
    "TriangleKind",
    "TriangleShape",
    "apex_census",
    "brute_force_census",
    "build_fig_constellation",
    "build_table",
    "census_row",
    "check_recurrence",
    "classify",
    "is_isosceles_free",
    "max_isosceles_free",
    "optimal_K",
    "squared_distance",
]
