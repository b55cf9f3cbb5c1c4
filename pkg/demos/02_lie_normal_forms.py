"""Canonical forms in the free metabelian Lie algebra.

Run from the repository root:  python demos/02_lie_normal_forms.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from metabelian import (
    LieElement,
    Polynomial,
    ad_action,
    apply_perm_lie,
    bracket,
    normal_form,
    parse_lie_expr,
    sn_generators,
)

n = 3

# The basis of the commutator ideal consists of left-normed brackets
# [x_{i1}, x_{i2}, x_{i3}, ...] with i1 > i2 <= i3 <= ...; everything else
# rewrites into it.
for text in ("[x1,x2]", "[x3,x2,x1]", "[[x2,x1],[x3,x1]]", "[x2,x1,x3,x2]"):
    element = normal_form(parse_lie_expr(text, n), n)
    print(f"{text:22} ->  {element}")

# Brackets of two commutators vanish: the algebra is metabelian.
f = normal_form(parse_lie_expr("[x2,x1]", n), n)
g = normal_form(parse_lie_expr("[x3,x1]", n), n)
print()
print("[[x2,x1],[x3,x1]]      = ", bracket(f, g))

# The commutator ideal is a module over polynomials in the ad-operators.
p = Polynomial.variable(n, 1) + Polynomial.variable(n, 3) ** 2
print(f"[x2,x1] * (x1 + x3^2)  =  {ad_action(f, p)}")

# Permutations of the variables act by automorphisms; the result is
# renormalized into the basis.
for sigma in sn_generators(n):
    print(f"sigma = {sigma!r:8} maps [x2,x1]ad x3 to ",
          apply_perm_lie(sigma, normal_form(parse_lie_expr("[x2,x1] ad(x3)", n), n)))
