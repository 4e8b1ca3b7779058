"""Column decomposition counts and exhaustive checks of the small lemmas.

A grid with at least 3 columns splits into the first column, the middle
block, and the last column.  `decompose` tallies isosceles triangles by
which of those parts hold their vertices; the closed forms it is checked
against only hold for sufficiently wide grids.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .census import iter_isosceles
from .errors import OutOfRegimeError
from .geometry import GridDims


@dataclass(frozen=True)
class ColumnDecomposition:
    """Counts from the first/middle/last column split of a grid.

    b: triangles with at least one vertex in the last column.
    c: triangles with a vertex in the first column and one in the last.
    a_count: c-triangles with all three vertices in the outer columns.
    b_count: c-triangles with one vertex in each of the three parts.
    """

    b: int
    c: int
    a_count: int
    b_count: int


@dataclass(frozen=True)
class IdentityCheckConfig:
    n_max: int = 10
    y_max: int = 200

    def __post_init__(self):
        if self.n_max < 1 or self.y_max < 1:
            raise ValueError("search bounds must be positive")


def decompose(dims: GridDims) -> ColumnDecomposition:
    """Tag every isosceles triangle by the columns holding its vertices."""
    if dims.cols < 3:
        raise ValueError(f"decompose needs cols >= 3, got {dims.cols} (no middle part)")
    last = dims.cols - 1
    b = c = a_count = b_count = 0
    for apex, q, r, _kind in iter_isosceles(dims):
        cols = (apex[1], q[1], r[1])
        in_first = 0 in cols
        in_last = last in cols
        if in_last:
            b += 1
        if in_first and in_last:
            c += 1
            if all(col == 0 or col == last for col in cols):
                a_count += 1
            else:
                b_count += 1
    return ColumnDecomposition(b=b, c=c, a_count=a_count, b_count=b_count)


def c_closed_form(n: int, k: int) -> int:
    """Closed form for the outer-column triangle count c, wide grids only.

    Valid for k > (n-1)^2 + 1: n(n-1) + floor((n-1)^2 / 2) when k is odd,
    floor((n-1)^2 / 2) when k is even.
    """
    if k <= (n - 1) ** 2 + 1:
        raise OutOfRegimeError(
            f"c closed form needs k > (n-1)^2+1 = {(n - 1) ** 2 + 1}, got k={k}"
        )
    base = (n - 1) ** 2 // 2
    if k % 2 == 1:
        return n * (n - 1) + base
    return base


def lemma3_check(n: int) -> bool:
    """Literal-summation check of 2*sum(n-2m) == floor((n-1)^2 / 2)."""
    total = 2 * sum(n - 2 * m for m in range(1, (n - 1) // 2 + 1))
    return total == (n - 1) ** 2 // 2


def lemma12_exhaust(cfg: IdentityCheckConfig = IdentityCheckConfig()) -> list[tuple]:
    """Exhaustively test the two sum-of-squares uniqueness lemmas.

    Lemma 1: 0 < x,u <= n and y > n^2/2 with x^2+y^2 = u^2+w^2 forces
    x = u, y = w.  Lemma 2: same with 0 <= x,u <= n and y > (n^2+1)/2.
    Returns the list of violating tuples (lemma, n, x, y, u, w); expected
    empty.  w ranges over all nonnegative roots of x^2+y^2-u^2, which is
    bounded by y+n since w^2 <= y^2+n^2.
    """
    violations = []
    for n in range(1, cfg.n_max + 1):
        for lemma, x_lo, y_min in ((1, 1, n * n // 2 + 1), (2, 0, (n * n + 1) // 2 + 1)):
            for x in range(x_lo, n + 1):
                for u in range(x_lo, n + 1):
                    for y in range(y_min, cfg.y_max + 1):
                        w_sq = x * x + y * y - u * u
                        if w_sq < 0:
                            continue
                        w = math.isqrt(w_sq)
                        if w * w != w_sq:
                            continue
                        if not (x == u and y == w):
                            violations.append((lemma, n, x, y, u, w))
    return violations
