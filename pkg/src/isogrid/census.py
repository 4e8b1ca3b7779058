"""Isosceles triangle census on a grid, by two independent methods.

`brute_force_census` enumerates all point triples (cubic, the oracle).
`apex_census` groups points by squared distance from each apex
(quadratic); it relies on the fact that no lattice triangle is
equilateral, so every isosceles lattice triangle has exactly one apex
and is produced exactly once.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import OracleCapExceededError
from .geometry import GridDims, TriangleKind, classify

DEFAULT_ORACLE_CAP = 400


@dataclass(frozen=True)
class CensusCounts:
    """Counts of nonzero-area isosceles triangles, total and per class."""

    total_iso: int = 0
    acute_iso: int = 0
    right_iso: int = 0
    obtuse_iso: int = 0

    def __post_init__(self):
        if self.total_iso != self.acute_iso + self.right_iso + self.obtuse_iso:
            raise ValueError(f"inconsistent census counts: {self}")

    def __add__(self, other: "CensusCounts") -> "CensusCounts":
        return CensusCounts(
            self.total_iso + other.total_iso,
            self.acute_iso + other.acute_iso,
            self.right_iso + other.right_iso,
            self.obtuse_iso + other.obtuse_iso,
        )

    def by_class(self, cls: str) -> int:
        """Look up one count by class name: iso, acute, right or obtuse."""
        return {
            "iso": self.total_iso,
            "acute": self.acute_iso,
            "right": self.right_iso,
            "obtuse": self.obtuse_iso,
        }[cls]


SHAPE_CLASSES = ("iso", "acute", "right", "obtuse")


def brute_force_census(dims: GridDims, cap: int = DEFAULT_ORACLE_CAP) -> CensusCounts:
    """Count isosceles triangles by classifying every unordered triple."""
    if dims.point_count > cap:
        raise OracleCapExceededError(
            f"{dims.rows}x{dims.cols} has {dims.point_count} points, over the "
            f"oracle cap of {cap}; use apex_census"
        )
    acute = right = obtuse = 0
    for p, q, r in combinations(dims.points(), 3):
        shape = classify(p, q, r)
        if not shape.isosceles:
            continue
        if shape.kind is TriangleKind.ACUTE:
            acute += 1
        elif shape.kind is TriangleKind.RIGHT:
            right += 1
        elif shape.kind is TriangleKind.OBTUSE:
            obtuse += 1
    return CensusCounts(acute + right + obtuse, acute, right, obtuse)


def iter_isosceles(dims: GridDims):
    """Yield every nonzero-area isosceles triangle exactly once.

    Yields (apex, q, r, kind) where apex is the vertex between the two
    equal sides and kind is the triangle's TriangleKind.
    """
    points = dims.points()
    for apex in points:
        ar, ac = apex
        groups: dict[int, list] = {}
        for q in points:
            if q is apex:
                continue
            dr = q[0] - ar
            dc = q[1] - ac
            groups.setdefault(dr * dr + dc * dc, []).append(q)
        for leg_sq, group in groups.items():
            if len(group) < 2:
                continue
            for q, r in combinations(group, 2):
                # Same-distance collinear pair <=> apex is the midpoint.
                if q[0] + r[0] == 2 * ar and q[1] + r[1] == 2 * ac:
                    continue
                dr = q[0] - r[0]
                dc = q[1] - r[1]
                base_sq = dr * dr + dc * dc
                # Base angles of an isosceles triangle are always acute,
                # so the apex angle alone fixes the classification.
                two_leg = 2 * leg_sq
                if two_leg == base_sq:
                    kind = TriangleKind.RIGHT
                elif two_leg < base_sq:
                    kind = TriangleKind.OBTUSE
                else:
                    kind = TriangleKind.ACUTE
                yield apex, q, r, kind


def _apex_pass(dims: GridDims, apexes) -> CensusCounts:
    points = dims.points()
    acute = right = obtuse = 0
    for apex in apexes:
        ar, ac = apex
        groups: dict[int, list] = {}
        for q in points:
            if q == apex:
                continue
            dr = q[0] - ar
            dc = q[1] - ac
            groups.setdefault(dr * dr + dc * dc, []).append(q)
        for leg_sq, group in groups.items():
            if len(group) < 2:
                continue
            two_leg = 2 * leg_sq
            row_sum = 2 * ar
            col_sum = 2 * ac
            for q, r in combinations(group, 2):
                if q[0] + r[0] == row_sum and q[1] + r[1] == col_sum:
                    continue
                dr = q[0] - r[0]
                dc = q[1] - r[1]
                base_sq = dr * dr + dc * dc
                if two_leg > base_sq:
                    acute += 1
                elif two_leg == base_sq:
                    right += 1
                else:
                    obtuse += 1
    return CensusCounts(acute + right + obtuse, acute, right, obtuse)


def apex_census(dims: GridDims, threads: int = 1) -> CensusCounts:
    """Count isosceles triangles by grouping equidistant points per apex.

    Equals brute_force_census exactly.  With threads > 1 the apex loop
    is partitioned into chunks whose partial counts are summed; the sum
    is order-free, so the result is identical for any worker count.
    """
    points = dims.points()
    if threads <= 1 or len(points) < 2 * threads:
        return _apex_pass(dims, points)
    chunk = (len(points) + threads - 1) // threads
    slices = [points[i : i + chunk] for i in range(0, len(points), chunk)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        partials = list(pool.map(lambda s: _apex_pass(dims, s), slices))
    total = CensusCounts()
    for part in partials:
        total = total + part
    return total


@lru_cache(maxsize=None)
def census_row(n: int, k: int, threads: int = 1) -> CensusCounts:
    """Census for an n-by-k grid, oriented with the smaller side as rows.

    The result is orientation-independent (counting is symmetric in the
    two grid dimensions); orienting shortens the apex grouping pass.
    """
    if n > k:
        n, k = k, n
    return apex_census(GridDims(n, k), threads=threads)
