"""End to end: average a random element, decompose it, verify exactly.

Run from the repository root:  python demos/05_decomposing_invariants.py
"""

import pathlib
import random
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from metabelian import (
    BasisCommutator,
    LieElement,
    decompose_invariant,
    invariant_space_basis,
    is_invariant_lie,
    reynolds_lie,
)

rng = random.Random(20240817)
n = 3

# Build a random degree-5 element of the commutator ideal and average it
# over all permutations to get an invariant.
comm = {}
for _ in range(6):
    i2 = rng.randint(1, n - 1)
    i1 = rng.randint(i2 + 1, n)
    tail = sorted(rng.randint(i2, n) for _ in range(3))
    c = BasisCommutator(i1, i2, tail)
    comm[c] = comm.get(c, 0) + rng.randint(-3, 3)
f = reynolds_lie(LieElement(n, None, comm))
print("invariant f =", f)
print("invariant?  ", is_invariant_lie(f))

# Decompose over the generators h_ij with symmetric-polynomial coefficients
# (written in the e basis), then rebuild and compare exactly.
dec = decompose_invariant(f)
print()
print(dec.to_text())
rebuilt = dec.reconstruct()
print()
print("exact rebuild?", rebuilt == f)

# Degree-by-degree dimensions of the invariants, by brute-force linear
# algebra over the monomial basis.
print()
for d in range(1, 7):
    basis = invariant_space_basis(n, d)
    print(f"dim of degree-{d} invariants over {n} variables: {len(basis)}")
