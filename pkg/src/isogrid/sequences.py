"""Sequence tables over k and verification of the recurrence registry.

Each registry entry describes one published recurrence claim: which
shape-class column it constrains, the equation form, the inhomogeneous
term as a function of (n, parity of k), and where it applies.  A single
generic evaluator checks them all by exact integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .census import CensusCounts, census_row
from .errors import TableTooShortError, UnknownTheoremError


@dataclass(frozen=True)
class SequenceTable:
    """Census counts for a fixed n over the contiguous range k = 1..k_max."""

    n: int
    rows: tuple[CensusCounts, ...]
    k_first: int = 1

    @property
    def k_max(self) -> int:
        return self.k_first + len(self.rows) - 1

    def counts(self, k: int) -> CensusCounts:
        if not self.k_first <= k <= self.k_max:
            raise TableTooShortError(f"k={k} outside table range 1..{self.k_max}")
        return self.rows[k - self.k_first]

    def column(self, cls: str) -> list[int]:
        """One class column (iso/acute/right/obtuse), indexed from k_first."""
        return [row.by_class(cls) for row in self.rows]


def build_table(n: int, k_max: int, threads: int = 1) -> SequenceTable:
    """Census rows for k = 1..k_max at fixed n."""
    if n < 1 or k_max < 1:
        raise ValueError("n and k_max must be positive")
    return SequenceTable(n, tuple(census_row(n, k, threads) for k in range(1, k_max + 1)))


# Equation forms, as (lookback coefficients, order).  residual(k) =
# a(k) - sum(coef[i] * a(k-1-i)); a claim holds where residual equals
# its inhomogeneous term.
_FORMS = {
    "hom4": (2, 0, -2, 1),
    "inhom2": (2, -1),
    "hom3": (3, -3, 1),
}


@dataclass(frozen=True)
class Clause:
    """One equation of a theorem: class column, form and applicability."""

    cls: str
    form: str
    # Inhomogeneous term as rhs(n, k); zero for homogeneous forms.
    rhs: Callable[[int, int], int] = lambda n, k: 0
    # Exclusive lower bound on k, or None when at_k is used.
    k_above: Callable[[int], int] | None = None
    # Single k at which the equation is claimed, for boundary theorems.
    at_k: Callable[[int], int] | None = None


@dataclass(frozen=True)
class TheoremSpec:
    clauses: tuple[Clause, ...]
    applies: Callable[[int], bool] = lambda n: n >= 2


def _floor_half_sq(n: int) -> int:
    return (n - 1) ** 2 // 2


def _parity_term(n: int, k: int) -> int:
    # n(n-1) + floor((n-1)^2/2) for odd k, floor((n-1)^2/2) for even k.
    base = _floor_half_sq(n)
    return n * (n - 1) + base if k % 2 == 1 else base


def _obtuse_parity_term(n: int, k: int) -> int:
    return n * (n - 1) if k % 2 == 1 else 0


REGISTRY: dict[str, TheoremSpec] = {
    "main": TheoremSpec(
        (Clause("iso", "hom4", k_above=lambda n: (n - 1) ** 2 + 3),)
    ),
    "main2": TheoremSpec(
        (Clause("iso", "inhom2", rhs=_parity_term, k_above=lambda n: (n - 1) ** 2 + 1),)
    ),
    "main2_acute": TheoremSpec(
        (Clause("acute", "inhom2", rhs=lambda n, k: _floor_half_sq(n),
                k_above=lambda n: (n - 1) ** 2 + 1),)
    ),
    "main2_obtuse": TheoremSpec(
        (Clause("obtuse", "inhom2", rhs=_obtuse_parity_term,
                k_above=lambda n: max(3, (n - 1) ** 2 + 1)),)
    ),
    "main2_right": TheoremSpec(
        (Clause("right", "inhom2", k_above=lambda n: max(3, (n - 1) ** 2 + 1)),)
    ),
    "main_even": TheoremSpec(
        (Clause("iso", "hom4", k_above=lambda n: (n - 1) ** 2 + 2),),
        applies=lambda n: n >= 2 and n % 2 == 1,
    ),
    "main2_even": TheoremSpec(
        (Clause("iso", "inhom2", rhs=_parity_term, k_above=lambda n: (n - 1) ** 2),),
        applies=lambda n: n >= 2 and n % 2 == 1,
    ),
    "main_even_aor": TheoremSpec(
        (
            Clause("acute", "hom4", k_above=lambda n: (n - 1) ** 2 + 2),
            Clause("obtuse", "hom4", k_above=lambda n: max(7, (n - 1) ** 2 + 2)),
            Clause("right", "hom4", k_above=lambda n: max(7, (n - 1) ** 2 + 2)),
        ),
        applies=lambda n: n >= 2 and n % 2 == 1,
    ),
    "main2_even_obtuse": TheoremSpec(
        (Clause("obtuse", "inhom2", rhs=_obtuse_parity_term,
                k_above=lambda n: max(5, (n - 1) ** 2)),),
        applies=lambda n: n >= 2 and n % 2 == 1,
    ),
    "main2_even_acute": TheoremSpec(
        (Clause("acute", "inhom2", rhs=lambda n, k: _floor_half_sq(n),
                k_above=lambda n: (n - 1) ** 2),)
    ),
    "cor_acute_homog": TheoremSpec(
        (Clause("acute", "hom3", k_above=lambda n: (n - 1) ** 2 + 1),)
    ),
    "main2_even_right": TheoremSpec(
        (Clause("right", "inhom2", k_above=lambda n: max(5, (n - 1) ** 2)),),
        applies=lambda n: n > 2,
    ),
    "main3": TheoremSpec(
        (Clause("iso", "inhom2", rhs=lambda n, k: _floor_half_sq(n) + 4,
                at_k=lambda n: (n - 1) ** 2 + 1),),
        applies=lambda n: n >= 2 and n % 2 == 0,
    ),
    "main3_obtuse": TheoremSpec(
        (Clause("obtuse", "inhom2", rhs=lambda n, k: 4,
                at_k=lambda n: (n - 1) ** 2 + 1),),
        applies=lambda n: n > 2 and n % 2 == 0,
    ),
    "main4": TheoremSpec(
        (Clause("iso", "inhom2", rhs=lambda n, k: _floor_half_sq(n) + 4,
                at_k=lambda n: (n - 1) ** 2),),
        applies=lambda n: n >= 3 and n % 2 == 1,
    ),
    "main4_obtuse": TheoremSpec(
        (Clause("obtuse", "inhom2", rhs=lambda n, k: 4,
                at_k=lambda n: (n - 1) ** 2),),
        applies=lambda n: n > 3 and n % 2 == 1,
    ),
    "defect_sec5": TheoremSpec(
        (Clause("iso", "hom4", rhs=lambda n, k: -4,
                at_k=lambda n: (n - 1) ** 2 + 3 if n % 2 == 0 else (n - 1) ** 2 + 2),)
    ),
}


@dataclass
class RecurrenceReport:
    theorem_id: str
    n: int
    k_checked: list[int] = field(default_factory=list)
    violations: list[tuple[int, int, int]] = field(default_factory=list)
    boundary_defects: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _residual(seq_at: Callable[[int], int], form: str, k: int) -> int:
    coefs = _FORMS[form]
    return seq_at(k) - sum(c * seq_at(k - 1 - i) for i, c in enumerate(coefs))


def _zero_extended(col: list[int], k_first: int) -> Callable[[int], int]:
    """Column lookup treating k <= 0 as an empty grid with zero triangles."""

    def seq_at(k: int) -> int:
        if k <= 0:
            return 0
        if k < k_first:
            raise TableTooShortError(f"k={k} below table start {k_first}")
        return col[k - k_first]

    return seq_at


def check_recurrence(table: SequenceTable, theorem_id: str) -> RecurrenceReport:
    """Evaluate one registry claim at every applicable k in the table.

    A violation is any exact integer mismatch between the recurrence
    residual and the claimed inhomogeneous term.  Boundary (single-k)
    claims also record the observed residual as a defect value.
    """
    spec = REGISTRY.get(theorem_id)
    if spec is None:
        raise UnknownTheoremError(f"unknown theorem id: {theorem_id}")
    report = RecurrenceReport(theorem_id, table.n)
    if not spec.applies(table.n):
        return report
    n = table.n
    for clause in spec.clauses:
        col = table.column(clause.cls)
        seq_at = _zero_extended(col, table.k_first)
        if clause.at_k is not None:
            ks: Iterable[int] = [clause.at_k(n)]
            if ks[0] < table.k_first or ks[0] > table.k_max:
                raise TableTooShortError(
                    f"{theorem_id}: table 1..{table.k_max} does not cover k={ks[0]}"
                )
        else:
            lo = max(table.k_first, clause.k_above(n) + 1)
            if table.k_max < lo:
                raise TableTooShortError(
                    f"{theorem_id}: table 1..{table.k_max} too short (needs k > {lo - 1})"
                )
            ks = range(lo, table.k_max + 1)
        for k in ks:
            actual = _residual(seq_at, clause.form, k)
            expected = clause.rhs(n, k)
            report.k_checked.append(k)
            if clause.at_k is not None:
                report.boundary_defects.append((k, actual))
            if actual != expected:
                report.violations.append((k, expected, actual))
    return report


def optimal_K(table: SequenceTable) -> int:
    """Smallest K such that the homogeneous 4-term recurrence on the
    total column holds at every table k > K.

    Needs the table to reach at least (n-1)^2 + 8 so the answer is
    determined rather than truncated.
    """
    n = table.n
    if table.k_max < (n - 1) ** 2 + 8:
        raise TableTooShortError(
            f"optimal_K needs k_max >= {(n - 1) ** 2 + 8}, table has {table.k_max}"
        )
    seq_at = _zero_extended(table.column("iso"), table.k_first)
    best = table.k_first - 1  # nothing verifiable below the table
    for k in range(table.k_first, table.k_max + 1):
        if _residual(seq_at, "hom4", k) != 0:
            best = k
    return best
