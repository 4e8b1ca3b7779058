"""Exact integer polynomial arithmetic and generating-function checks.

Polynomials are lists of ints, ascending powers, no trailing zeros (the
zero polynomial is the empty list).  Every shape-class sequence has a
rational generating function with the fixed denominator
(x-1)^3 (x+1) = x^4 - 2x^3 + 2x - 1; this module reconstructs the
numerators from computed sequences and compares them with the vendored
reference coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from .errors import RecurrenceTailError, TableTooShortError
from .sequences import SequenceTable

IntPolynomial = list[int]

# (x-1)^3 (x+1), ascending.
DENOMINATOR: IntPolynomial = [-1, 2, 0, -2, 1]

FIXTURE_RESOURCE = "table_numerators.txt"


def poly_normalize(p: IntPolynomial) -> IntPolynomial:
    """Strip trailing zero coefficients; zero polynomial is []."""
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return list(p[:n])


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, coef in enumerate(b):
        out[i] += coef
    return poly_normalize(out)


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Exact convolution product."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return poly_normalize(out)


def poly_divmod(a: IntPolynomial, b: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Polynomial division over the integers; b must have leading
    coefficient +-1 so quotients stay integral."""
    b = poly_normalize(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if abs(b[-1]) != 1:
        raise ValueError("divisor must have unit leading coefficient")
    rem = list(a)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for i in range(len(rem) - len(b), -1, -1):
        factor = rem[i + len(b) - 1] // lead
        if factor == 0:
            continue
        quot[i] = factor
        for j, bj in enumerate(b):
            rem[i + j] -= factor * bj
    return poly_normalize(quot), poly_normalize(rem)


def poly_divides(d: IntPolynomial, p: IntPolynomial) -> bool:
    """True iff d divides p exactly (zero polynomial divides only itself)."""
    if not poly_normalize(p):
        return True
    _, rem = poly_divmod(p, d)
    return not rem


@dataclass(frozen=True)
class GenFunction:
    numerator: IntPolynomial
    denominator: IntPolynomial = field(default_factory=lambda: list(DENOMINATOR))


def numerator_from_sequence(table: SequenceTable, cls: str) -> IntPolynomial:
    """Reconstruct the numerator polynomial from a computed sequence.

    The series sum_{k>=1} a(k) x^(k-1) times the fixed denominator must
    collapse to a polynomial; coefficients are exact up to index
    k_max - 1, and the spec's reliable window ends 4 terms earlier.  Any
    nonzero coefficient inside the window past the numerator proper
    means the sequence breaks the recurrence where it was claimed.
    """
    seq = table.column(cls)
    if table.k_first != 1:
        raise TableTooShortError("numerator reconstruction needs a table from k=1")
    if len(seq) < 9:
        raise TableTooShortError("table too short to bound the numerator degree")
    prod = poly_mul(seq, DENOMINATOR)
    # Product indices 0..len(seq)-1 are exact (the corrupted tail from
    # truncating the series is indices >= len(seq)); require the last 4
    # exact ones to be zero so the degree sits safely inside the table.
    window_end = len(seq) - 4
    for i in range(window_end, len(seq)):
        if i < len(prod) and prod[i] != 0:
            raise RecurrenceTailError(i, prod[i])
    return poly_normalize(prod[:window_end])


def expand_gf(gf: GenFunction, terms: int) -> list[int]:
    """Power-series expansion of numerator/denominator by long division.

    Term j is the coefficient of x^j, i.e. the sequence value at
    k = j + 1 under the series convention above.
    """
    if terms < 1:
        raise ValueError("terms must be >= 1")
    num, den = gf.numerator, gf.denominator
    if not poly_normalize(den) or den[0] == 0:
        raise ZeroDivisionError("denominator must have nonzero constant term")
    out = []
    for j in range(terms):
        acc = num[j] if j < len(num) else 0
        for i in range(1, min(j, len(den) - 1) + 1):
            acc -= den[i] * out[j - i]
        q, r = divmod(acc, den[0])
        if r:
            raise ValueError("series expansion is not integral")
        out.append(q)
    return out


def load_fixture_numerators() -> dict[tuple[int, str], IntPolynomial]:
    """Vendored reference numerators: {(n, class): ascending coefficients}.

    File format: one polynomial per line, `n <class> c0 c1 c2 ...`,
    '#' starts a comment.
    """
    text = resources.files("isogrid.fixtures").joinpath(FIXTURE_RESOURCE).read_text()
    fixtures: dict[tuple[int, str], IntPolynomial] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        n, cls = int(parts[0]), parts[1]
        fixtures[(n, cls)] = poly_normalize([int(c) for c in parts[2:]])
    return fixtures


@dataclass
class MatchResult:
    computed: IntPolynomial
    expected: IntPolynomial

    @property
    def passed(self) -> bool:
        return self.computed == self.expected

    def diffs(self) -> list[tuple[int, int, int]]:
        """(index, expected, computed) for every differing coefficient."""
        out = []
        for i in range(max(len(self.computed), len(self.expected))):
            c = self.computed[i] if i < len(self.computed) else 0
            e = self.expected[i] if i < len(self.expected) else 0
            if c != e:
                out.append((i, e, c))
        return out


def fixture_table_length(n: int) -> int:
    """k_max long enough to pin every class numerator for this n."""
    fixtures = load_fixture_numerators()
    max_deg = max(len(fixtures[(n, cls)]) - 1 for cls in ("iso", "acute", "right", "obtuse"))
    return max(max_deg + 8, 13)


def match_tables(table: SequenceTable) -> dict[str, MatchResult]:
    """Compare reconstructed numerators against the vendored references."""
    fixtures = load_fixture_numerators()
    n = table.n
    if not 2 <= n <= 8:
        raise ValueError("reference numerators cover n in [2, 8] only")
    results = {}
    for cls in ("iso", "acute", "right", "obtuse"):
        results[cls] = MatchResult(
            computed=numerator_from_sequence(table, cls),
            expected=fixtures[(n, cls)],
        )
    return results
