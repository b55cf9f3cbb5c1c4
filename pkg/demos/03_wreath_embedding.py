"""The wreath-product embedding and its constructive inverse.

Run from the repository root:  python demos/03_wreath_embedding.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from metabelian import (
    embed,
    in_commutator_image,
    membership_residual,
    normal_form,
    parse_lie_expr,
    parse_wreath,
    preimage,
    substitute_u_equals_x,
)

n = 2

# x_i embeds as u_i + v_i; a commutator [x_i, x_j] lands on u_i x_j - u_j x_i.
for text in ("x1", "[x2,x1]", "[x2,x1] ad(x2 - x1)"):
    f = normal_form(parse_lie_expr(text, n), n)
    print(f"{text:22} ->  {embed(f)}")

# Membership in the embedded commutator ideal is a single polynomial
# identity: the v-part vanishes and sum_i x_i p_i = 0.
w = embed(normal_form(parse_lie_expr("[x2,x1,x2] - [x2,x1,x1]", n), n))
print()
print("image element      :", w)
print("in image?          :", in_commutator_image(w))
print("u -> x evaluation  :", substitute_u_equals_x(w))

bad = parse_wreath("u1*( 1 )", n)
print("u1 alone in image? :", in_commutator_image(bad),
      " residual =", membership_residual(bad))

# The inverse map recovers the canonical Lie form exactly.
print()
print("preimage           :", preimage(w))
print("round trip exact?  :", embed(preimage(w)) == w)
