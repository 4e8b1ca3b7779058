#!/usr/bin/env python3
"""Regenerate src/isogrid/fixtures/table_numerators.txt.

Each reference numerator is entered in its published factored form and
expanded with isogrid's own exact polynomial product; the unit tests
re-expand the same factored strings independently, so a transcription
typo has to survive two entry paths to go unnoticed.
"""
from pathlib import Path

from isogrid.genfunc import poly_mul, poly_normalize

X = [0, 1]


def p(*coeffs_desc):
    """Polynomial from descending coefficients, e.g. p(2, -1, -2)."""
    return poly_normalize(list(reversed(coeffs_desc)))


def mono(coef, deg):
    return poly_normalize([0] * deg + [coef])


def sparse(*terms):
    """Polynomial from (coef, degree) pairs."""
    out = []
    for coef, deg in terms:
        while len(out) <= deg:
            out.append(0)
        out[deg] += coef
    return poly_normalize(out)


def prod(*factors):
    out = [1]
    for f in factors:
        out = poly_mul(out, f)
    return out


# Reference numerators, factored exactly as published.
FACTORED = {
    # total isosceles count
    ("iso", 2): prod([0, 2], p(2, -1, -2)),
    ("iso", 3): prod([0, 2], p(2, 4, 2, -8, -5)),
    ("iso", 4): prod([0, 4], sparse((1, 10), (-1, 8), (2, 6), (1, 5), (4, 4),
                                    (4, 3), (-3, 2), (-9, 1), (-4, 0))),
    ("iso", 5): prod([0, 4], sparse((1, 16), (-1, 14), (2, 10), (2, 9), (-1, 8),
                                    (-1, 7), (5, 6), (6, 5), (6, 4), (1, 3),
                                    (-8, 2), (-15, 1), (-6, 0))),
    ("iso", 6): prod([0, 2], sparse((2, 26), (-2, 24), (2, 22), (-2, 20), (6, 16),
                                    (-4, 14), (2, 13), (-2, 11), (6, 10), (12, 9),
                                    (-6, 7), (26, 6), (24, 5), (6, 4), (-8, 3),
                                    (-30, 2), (-43, 1), (-16, 0))),
    ("iso", 7): prod([0, 2], sparse((2, 36), (-2, 34), (2, 28), (2, 26), (-4, 24),
                                    (4, 22), (-4, 20), (4, 19), (-2, 17), (10, 16),
                                    (-6, 14), (4, 13), (2, 12), (-2, 11), (10, 10),
                                    (18, 9), (2, 8), (4, 7), (40, 6), (22, 5),
                                    (-2, 4), (-20, 3), (-44, 2), (-58, 1), (-21, 0))),
    ("iso", 8): prod([0, 4], sparse((1, 50), (-1, 48), (1, 46), (-1, 44), (3, 36),
                                    (-2, 34), (-1, 32), (2, 28), (2, 26), (1, 25),
                                    (-3, 24), (-1, 23), (3, 22), (1, 21), (-4, 20),
                                    (4, 19), (1, 18), (-3, 17), (7, 16), (-3, 14),
                                    (5, 13), (3, 12), (-2, 11), (6, 10), (13, 9),
                                    (10, 8), (7, 7), (19, 6), (9, 5), (-7, 4),
                                    (-17, 3), (-29, 2), (-37, 1), (-13, 0))),
    # obtuse
    ("obtuse", 2): mono(-2, 4),
    ("obtuse", 3): prod(mono(-2, 4), p(1, 0, 2)),
    ("obtuse", 4): prod(mono(2, 3), sparse((2, 8), (-2, 6), (-1, 5), (-2, 3),
                                           (2, 2), (-3, 1), (-2, 0))),
    ("obtuse", 5): prod([0, 2], sparse((2, 16), (-2, 14), (4, 10), (1, 9), (-4, 8),
                                       (-4, 7), (-1, 5), (4, 4), (-6, 3), (-3, 2),
                                       (-1, 0))),
    ("obtuse", 6): prod([0, 2], sparse((2, 26), (-2, 24), (2, 22), (-2, 20), (6, 16),
                                       (-6, 14), (2, 13), (-3, 11), (6, 10), (2, 9),
                                       (-6, 8), (-7, 7), (4, 6), (2, 4), (-9, 3),
                                       (-4, 2), (-2, 0))),
    ("obtuse", 7): prod([0, 2], sparse((2, 36), (-2, 34), (2, 28), (2, 26), (-4, 24),
                                       (4, 22), (-4, 20), (2, 19), (10, 16), (-2, 15),
                                       (-10, 14), (5, 13), (-8, 11), (8, 10), (3, 9),
                                       (-8, 8), (-6, 7), (8, 6), (-3, 5), (-11, 3),
                                       (-4, 2), (-1, 1), (-4, 0))),
    ("obtuse", 8): prod([0, 2], sparse((2, 50), (-2, 48), (2, 46), (-2, 44), (6, 36),
                                       (-4, 34), (-2, 32), (4, 28), (2, 26), (2, 25),
                                       (-6, 24), (-2, 23), (8, 22), (2, 21), (-8, 20),
                                       (2, 19), (16, 16), (-5, 15), (-16, 14), (10, 13),
                                       (-15, 11), (10, 10), (4, 9), (-4, 8), (-5, 7),
                                       (6, 6), (-6, 5), (-2, 4), (-13, 3), (-4, 2),
                                       (-2, 1), (-6, 0))),
    # acute
    ("acute", 2): [],
    ("acute", 3): prod(mono(2, 2), [1, 1], p(3, -4)),
    ("acute", 4): prod(mono(2, 2), [1, 1], p(2, -1, 3, 3, -9)),
    ("acute", 5): prod(mono(2, 2), [1, 1], p(2, -2, 1, 5, 3, -1, 3, -15)),
    ("acute", 6): prod(mono(2, 2), [1, 1],
                       sparse((2, 12), (-2, 11), (2, 10), (-2, 9), (7, 7), (-5, 6),
                              (1, 5), (15, 4), (2, 3), (-6, 2), (2, 1), (-22, 0))),
    ("acute", 7): prod(mono(2, 2), [1, 1],
                       sparse((2, 17), (-2, 16), (2, 13), (2, 12), (-4, 11), (4, 10),
                              (-1, 9), (-1, 8), (11, 7), (-7, 6), (10, 5), (14, 4),
                              (2, 3), (-13, 2), (2, 1), (-30, 0))),
    ("acute", 8): prod(mono(2, 2), [1, 1],
                       sparse((2, 24), (-2, 23), (2, 22), (-2, 21), (6, 17), (-4, 16),
                              (-2, 15), (4, 13), (4, 12), (-7, 11), (9, 10), (-3, 9),
                              (-1, 8), (16, 7), (10, 5), (12, 4), (1, 3), (-21, 2),
                              (3, 1), (-39, 0))),
    # right
    ("right", 2): prod([0, 2], [-1, 1], [1, 1], p(1, 2)),
    ("right", 3): prod([0, 2], [-1, 1], [1, 1], p(1, 2, 4, 5)),
    ("right", 4): prod([0, 2], [-1, 1], [1, 1], p(1, 2, 4, 6, 9, 8)),
    ("right", 5): prod([0, 2], [-1, 1], [1, 1], p(1, 2, 4, 6, 9, 12, 15, 11)),
    ("right", 6): prod([0, 2], [-1, 1], [1, 1], p(1, 2, 4, 6, 9, 12, 16, 20, 21, 14)),
    ("right", 7): prod([0, 2], [-1, 1], [1, 1],
                       p(1, 2, 4, 6, 9, 12, 16, 20, 25, 29, 27, 17)),
    ("right", 8): prod([0, 2], [-1, 1], [1, 1],
                       p(1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36, 38, 33, 20)),
}


def main():
    out = Path(__file__).resolve().parents[1] / "src/isogrid/fixtures/table_numerators.txt"
    lines = [
        "# Reference generating-function numerators over (x-1)^3 (x+1),",
        "# expanded from their published factored forms.",
        "# Format: n <class> c0 c1 c2 ...  (ascending powers)",
    ]
    for n in range(2, 9):
        for cls in ("iso", "acute", "right", "obtuse"):
            poly = FACTORED[(cls, n)]
            coeffs = " ".join(str(c) for c in poly) if poly else "0"
            lines.append(f"{n} {cls} {coeffs}")
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out} ({len(lines) - 3} polynomials)")

    # Internal consistency: the class numerators must sum to the total.
    from isogrid.genfunc import poly_add
    for n in range(2, 9):
        total = poly_add(
            poly_add(FACTORED[("acute", n)], FACTORED[("right", n)]),
            FACTORED[("obtuse", n)],
        )
        assert total == FACTORED[("iso", n)], f"class sum mismatch at n={n}"
    print("class sums consistent for n in [2, 8]")


if __name__ == "__main__":
    main()
