"""Exact polynomial arithmetic, symmetry, and the elementary-symmetric rewrite.

Run from the repository root:  python demos/01_polynomials_and_symmetry.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from fractions import Fraction

from metabelian import (
    Polynomial,
    decompose_in_elementary,
    elementary_symmetric,
    is_symmetric,
    reynolds_poly,
)

x = Polynomial.variable

# Everything is exact: coefficients are fractions, never floats.
p = Fraction(3, 2) * x(3, 1) ** 2 * x(3, 2) - x(3, 3)
print("p              =", p)
print("p * (x1 - x3)  =", p * (x(3, 1) - x(3, 3)))

# The elementary symmetric polynomials e_1, ..., e_n.
for q in range(4):
    print(f"e_{q}(x1,x2,x3) =", elementary_symmetric(3, q))

# Averaging over all permutations projects any polynomial onto the
# symmetric ones.
print()
print("p symmetric?     ", is_symmetric(p))
sym = reynolds_poly(p)
print("averaged p       =", sym)
print("now symmetric?   ", is_symmetric(sym))

# Every symmetric polynomial is uniquely a polynomial in e_1, ..., e_n;
# the rewrite is exact and certified by expanding back.
power_sum = x(3, 1) ** 3 + x(3, 2) ** 3 + x(3, 3) ** 3
dec = decompose_in_elementary(power_sum)
print()
print("x1^3+x2^3+x3^3   =", dec, "   (in e variables)")
print("expands back?    ", dec.expand() == power_sum)
