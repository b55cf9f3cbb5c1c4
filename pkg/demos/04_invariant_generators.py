"""The finite generating set of the invariant module and its relations.

Run from the repository root:  python demos/04_invariant_generators.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from itertools import combinations

from metabelian import (
    epsilon,
    generator_h,
    generator_h_lie,
    is_invariant_lie,
    substitute_u_equals_x,
    verify_module_relation,
)

# The building blocks eps_j: u-linear sums over squarefree monomials that
# avoid the chosen u-index.  Evaluating u -> x gives j * e_j.
n = 3
for j in range(1, n + 1):
    print(f"eps_{j} =", epsilon(n, j))
    print(f"       eval u->x: {substitute_u_equals_x(epsilon(n, j))}  (= {j}*e_{j})")

# The invariant part of the commutator ideal is generated, over symmetric
# polynomials, by h_ij = j*eps_i*e_j - i*eps_j*e_i.
print()
for i, j in combinations(range(1, n + 1), 2):
    print(f"h_{i}{j} =", generator_h(n, i, j))

print()
for i, j in combinations(range(1, n + 1), 2):
    f = generator_h_lie(n, i, j)
    print(f"f_{i}{j} =", f)
    print("       invariant?", is_invariant_lie(f))

# The generators are not free: each triple i < j < k satisfies
# k*h_ij*e_k - j*h_ik*e_j + i*h_jk*e_i = 0.
print()
for nn in (3, 4, 5):
    triples = list(combinations(range(1, nn + 1), 3))
    ok = all(verify_module_relation(nn, *t) for t in triples)
    print(f"n={nn}: all {len(triples)} three-index relations hold: {ok}")

# Sanity identity behind the generators: substituting u -> x kills them,
# because j*(i e_i)*e_j - i*(j e_j)*e_i cancels identically.
print()
print("h_23 evaluated at u=x:", substitute_u_equals_x(generator_h(3, 2, 3)))
