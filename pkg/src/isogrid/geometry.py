"""Exact integer predicates and triangle classification on lattice points.

All arithmetic is integer arithmetic; no floating point enters any
classification decision.  Points are (row, col) tuples, 0-based.
1-based figure coordinates are converted only at presentation boundaries.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import GridTooLargeError, InvalidTripleError

# (row, col) on the integer lattice, 0-based.
GridPoint = tuple[int, int]

# Grids whose unordered-triple count could overflow a signed 64-bit
# accumulator are rejected up front.
_COUNT_LIMIT = 2**63 - 1


class TriangleKind(Enum):
    DEGENERATE = "degenerate"
    ACUTE = "acute"
    RIGHT = "right"
    OBTUSE = "obtuse"


@dataclass(frozen=True)
class TriangleShape:
    kind: TriangleKind
    isosceles: bool = False


@dataclass(frozen=True)
class GridDims:
    """Extents of a rectangular grid: `rows` by `cols` lattice points."""

    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"grid dims must be positive, got {self.rows}x{self.cols}")
        p = self.rows * self.cols
        if p * (p - 1) // 2 * p > _COUNT_LIMIT:
            raise GridTooLargeError(
                f"{self.rows}x{self.cols} grid: triple count exceeds 64-bit guard"
            )

    @property
    def point_count(self) -> int:
        return self.rows * self.cols

    def points(self) -> list[GridPoint]:
        """All grid points in row-major order."""
        return [(r, c) for r in range(self.rows) for c in range(self.cols)]

    def contains(self, p: GridPoint) -> bool:
        return 0 <= p[0] < self.rows and 0 <= p[1] < self.cols

    def transpose(self) -> "GridDims":
        return GridDims(self.cols, self.rows)


def squared_distance(p: GridPoint, q: GridPoint) -> int:
    """Exact squared Euclidean distance between two lattice points."""
    dr = p[0] - q[0]
    dc = p[1] - q[1]
    return dr * dr + dc * dc


def cross(o: GridPoint, a: GridPoint, b: GridPoint) -> int:
    """Cross product of vectors o->a and o->b; zero iff collinear."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def classify(p: GridPoint, q: GridPoint, r: GridPoint) -> TriangleShape:
    """Classify the triangle on three pairwise-distinct lattice points.

    Collinearity is decided by the exact cross-product test.  For a
    non-degenerate triple with sorted squared sides s1 <= s2 <= s3 the
    kind is right iff s1 + s2 == s3, obtuse iff s1 + s2 < s3, acute
    otherwise; the triple is isosceles iff s1 == s2 or s2 == s3.
    """
    if p == q or p == r or q == r:
        raise InvalidTripleError(f"duplicate points in triple {p}, {q}, {r}")
    if cross(p, q, r) == 0:
        return TriangleShape(TriangleKind.DEGENERATE, False)
    s1, s2, s3 = sorted(
        (squared_distance(p, q), squared_distance(p, r), squared_distance(q, r))
    )
    if s1 + s2 == s3:
        kind = TriangleKind.RIGHT
    elif s1 + s2 < s3:
        kind = TriangleKind.OBTUSE
    else:
        kind = TriangleKind.ACUTE
    return TriangleShape(kind, s1 == s2 or s2 == s3)
