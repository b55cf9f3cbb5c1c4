"""Symmetric-group invariants of the free metabelian Lie algebra.

The fixed algebra splits as the line spanned by x_1 + ... + x_n plus the
invariant part of the commutator ideal, and the latter is a module over the
symmetric polynomials with finite generating set

    h_ij = j * eps_i * e_j - i * eps_j * e_i,      1 <= i < j <= n,

where eps_q is the u-linear polarization sum_i u_i e_{q-1}(all variables but
x_i) and e_q the elementary symmetric polynomial.  decompose_invariant makes
this constructive: any invariant is rewritten exactly as a scalar multiple of
x_1 + ... + x_n plus a combination of the h_ij with coefficients that are
polynomials in e_1, ..., e_n.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import factorial

from .errors import (
    DimensionError,
    DomainError,
    InternalConsistencyError,
    InvarianceError,
    KernelError,
    RankError,
)
from .lie import BasisCommutator, LieElement, ad_action, apply_perm_lie, grade
from .linalg import nullspace, solve_exact
from .permutations import enumerate_sn, sn_generators
from .polynomials import (
    EDecomposition,
    Polynomial,
    as_fraction,
    elementary_symmetric,
    expand_e_monomial,
    grlex_key,
    symmetry_violation,
)
from .wreath import WreathElement, embed, preimage

_ZERO = Fraction(0)
_ONE = Fraction(1)


def sum_of_variables(n: int) -> LieElement:
    """x_1 + ... + x_n, the unique invariant outside the commutator ideal."""
    return LieElement(n, (_ONE,) * n)


@lru_cache(maxsize=None)
def epsilon(n: int, j: int) -> WreathElement:
    """The u-linear generator sum_i u_i * e_{j-1}(variables other than x_i)."""
    if not 1 <= j <= n:
        raise RankError(f"index {j} outside 1..{n}")
    upart = []
    for i in range(n):
        terms = {}
        others = [k for k in range(n) if k != i]
        for subset in combinations(others, j - 1):
            mono = [0] * n
            for k in subset:
                mono[k] = 1
            terms[tuple(mono)] = _ONE
        upart.append(Polynomial(n, terms))
    return WreathElement(n, tuple(upart))


def polarized_elementary(n: int, p: int, q: int) -> Polynomial:
    """The bidegree-(p, q) polarization of e_{p+q} in the 2n-variable ring.

    Sums u_{i_1}..u_{i_p} x_{j_1}..x_{j_q} over pairwise-distinct indices
    with each group strictly increasing; u-variables occupy the first n
    slots of the ring.
    """
    if p < 0 or q < 0 or p + q <= 0 or p + q > n:
        raise DomainError(f"bidegree ({p}, {q}) outside 0 < p+q <= {n}")
    terms = {}
    for usubset in combinations(range(n), p):
        rest = [k for k in range(n) if k not in usubset]
        for xsubset in combinations(rest, q):
            mono = [0] * (2 * n)
            for k in usubset:
                mono[k] = 1
            for k in xsubset:
                mono[n + k] = 1
            terms[tuple(mono)] = _ONE
    return Polynomial(2 * n, terms)


@lru_cache(maxsize=None)
def generator_h(n: int, i: int, j: int) -> WreathElement:
    """The invariant module generator j*eps_i*e_j - i*eps_j*e_i."""
    if not 1 <= i < j <= n:
        raise RankError(f"need 1 <= i < j <= n, got ({i}, {j}) with n = {n}")
    return (
        epsilon(n, i).module_mul(elementary_symmetric(n, j)) * j
        - epsilon(n, j).module_mul(elementary_symmetric(n, i)) * i
    )


@lru_cache(maxsize=None)
def generator_h_lie(n: int, i: int, j: int) -> LieElement:
    """generator_h pulled back to canonical Lie basis form."""
    return preimage(generator_h(n, i, j))


def invariance_violation(f: LieElement):
    """A generator of S_n that moves f, or None if f is invariant."""
    if f.n == 1:
        return None
    for sigma in sn_generators(f.n):
        if apply_perm_lie(sigma, f) != f:
            return sigma
    return None


def is_invariant_lie(f: LieElement) -> bool:
    return invariance_violation(f) is None


def reynolds_lie(f: LieElement) -> LieElement:
    """Average over the full symmetric group; projects onto the invariants."""
    n = f.n
    if n == 1:
        return f
    total = LieElement.zero(n)
    for sigma in enumerate_sn(n):
        total = total + apply_perm_lie(sigma, f)
    return total * Fraction(1, factorial(n))


def solve_weighted_kernel(c):
    """Express a solution of sum_j j*t_j = 0 over the two-point solutions.

    The two-point solution z(j1, jk) has jk at position j1 and -j1 at
    position jk.  For support j_1 < ... < j_m the coefficients are
    beta_k = -c_{j_k} / j_1, and c = sum_k beta_k * z(j_1, j_k); the map
    {j_k: beta_k} is returned (empty for c = 0).
    """
    c = [as_fraction(v) for v in c]
    weighted = sum((k + 1) * v for k, v in enumerate(c))
    if weighted != 0:
        raise KernelError(f"sum j*t_j = {weighted}, expected 0")
    support = [k + 1 for k, v in enumerate(c) if v != 0]
    if not support:
        return {}
    if len(support) == 1:
        raise InternalConsistencyError(
            "a single nonzero coordinate cannot satisfy the weighted constraint"
        )
    j1 = support[0]
    return {jk: -c[jk - 1] / j1 for jk in support[1:]}


def verify_module_relation(n: int, i: int, j: int, k: int) -> bool:
    """Check k*h_ij*e_k - j*h_ik*e_j + i*h_jk*e_i = 0 in the wreath product."""
    if not 1 <= i < j < k <= n:
        raise RankError(f"need 1 <= i < j < k <= n, got ({i}, {j}, {k}) with n = {n}")
    combo = (
        generator_h(n, i, j).module_mul(elementary_symmetric(n, k)) * k
        - generator_h(n, i, k).module_mul(elementary_symmetric(n, j)) * j
        + generator_h(n, j, k).module_mul(elementary_symmetric(n, i)) * i
    )
    return combo.is_zero()


class InvariantDecomposition:
    """Certificate that an invariant equals f1_coeff*(x_1+...+x_n) plus
    the sum over i < j of the generator h_ij acted on by a symmetric
    polynomial given as an e-monomial combination."""

    __slots__ = ("n", "f1_coeff", "parts")

    def __init__(self, n: int, f1_coeff, parts):
        self.n = n
        self.f1_coeff = as_fraction(f1_coeff)
        clean = {}
        for (i, j), q in parts.items():
            if not 1 <= i < j <= n:
                raise RankError(f"bad generator pair ({i}, {j}) for rank {n}")
            if not q.is_zero():
                clean[(i, j)] = q
        self.parts = clean

    def items(self):
        """(i, j, EDecomposition) triples in lexicographic pair order."""
        return [(i, j, self.parts[(i, j)]) for (i, j) in sorted(self.parts)]

    def reconstruct(self) -> LieElement:
        """Evaluate the certificate back to a canonical Lie element."""
        total = sum_of_variables(self.n) * self.f1_coeff
        for i, j, q in self.items():
            total = total + ad_action(generator_h_lie(self.n, i, j), q.expand())
        return total

    def verify(self, f: LieElement) -> bool:
        return self.reconstruct() == f

    def to_text(self) -> str:
        lines = [f"f1 = {self.f1_coeff}"]
        for i, j, q in self.items():
            lines.append(f"q[{i},{j}] = {q.to_text()}")
        return "\n".join(lines)

    def __repr__(self):
        return self.to_text()


@lru_cache(maxsize=None)
def weighted_exponent_vectors(n: int, m: int):
    """All (b_1, ..., b_n) with nonnegative entries and sum k*b_k = m."""
    if n == 0:
        return ((),) if m == 0 else ()
    out = []
    for last in range(m // n + 1):
        for head in weighted_exponent_vectors(n - 1, m - n * last):
            out.append(head + (last,))
    return tuple(out)


def _wreath_coordinates(w: WreathElement) -> dict:
    coords = {}
    for i, p in enumerate(w.upart):
        for mono, coeff in p.terms.items():
            coords[(i, mono)] = coeff
    return coords


def decompose_invariant(f: LieElement) -> InvariantDecomposition:
    """Decompose an invariant element over the module generators h_ij.

    The linear part must be a multiple of x_1 + ... + x_n and is peeled off.
    Per homogeneous degree d, the embedded component is solved exactly as
    sum_j eps_j * r_j with each r_j an unknown combination of e-monomials of
    weighted degree d - j (deterministic Gauss elimination, unknowns ordered
    by j then graded-lex).  Writing r_j's coefficients against the exponent
    vector a obtained by bumping position j, each fixed a satisfies
    sum_j j * alpha_{a,j} = 0, so the weighted-kernel expansion converts the
    block into h_{j1,jk} terms with e-monomial coefficients.  The result is
    re-verified against the embedding before returning.
    """
    n = f.n
    violation = invariance_violation(f)
    if violation is not None:
        raise InvarianceError(f"element is not invariant: moved by {violation}", violation)
    f1_coeff = f.linear[0] if n >= 1 else _ZERO
    if any(v != f1_coeff for v in f.linear):
        raise InternalConsistencyError("invariant element with non-uniform linear part")
    fc = f.commutator_part()
    parts_acc = {}
    for d in fc.degrees():
        wd = embed(grade(fc, d))
        unknowns = []
        for j in range(1, min(n, d) + 1):
            for b in sorted(weighted_exponent_vectors(n, d - j), key=grlex_key):
                unknowns.append((j, b))
        columns = [
            _wreath_coordinates(
                epsilon(n, j).module_mul(expand_e_monomial(n, b))
            )
            for j, b in unknowns
        ]
        solution = solve_exact(columns, _wreath_coordinates(wd))
        if solution is None:
            raise InternalConsistencyError(
                f"degree-{d} component is outside the span of the eps_j generators"
            )
        alpha = {}
        for (j, b), gamma in zip(unknowns, solution):
            if gamma == 0:
                continue
            a = list(b)
            a[j - 1] += 1
            a = tuple(a)
            vec = alpha.setdefault(a, [_ZERO] * n)
            vec[j - 1] += gamma
        for a, cvec in sorted(alpha.items(), key=lambda kv: grlex_key(kv[0])):
            if all(v == 0 for v in cvec):
                continue
            if sum((k + 1) * v for k, v in enumerate(cvec)) != 0:
                raise InternalConsistencyError(
                    f"block {a} violates the weighted constraint; "
                    "the input cannot come from the commutator ideal"
                )
            j1 = next(k + 1 for k, v in enumerate(cvec) if v != 0)
            for jk, beta in solve_weighted_kernel(cvec).items():
                newexp = list(a)
                newexp[j1 - 1] -= 1
                newexp[jk - 1] -= 1
                if min(newexp) < 0:
                    raise InternalConsistencyError(
                        f"negative e-exponent while splitting block {a}"
                    )
                bucket = parts_acc.setdefault((j1, jk), {})
                key = tuple(newexp)
                val = bucket.get(key, _ZERO) + beta
                if val == 0:
                    bucket.pop(key, None)
                else:
                    bucket[key] = val
    result = InvariantDecomposition(
        n, f1_coeff, {pair: EDecomposition(n, terms) for pair, terms in parts_acc.items()}
    )
    check = WreathElement.zero(n)
    for i, j, q in result.items():
        check = check + generator_h(n, i, j).module_mul(q.expand())
    if check != embed(fc):
        raise InternalConsistencyError("reassembled decomposition does not match the input")
    return result


def _basis_commutators(n: int, d: int):
    """All degree-d basis commutators on n variables, in canonical order."""
    out = []
    for i2 in range(1, n + 1):
        for i1 in range(i2 + 1, n + 1):
            for tail in combinations_with_replacement(range(i2, n + 1), d - 2):
                out.append(BasisCommutator(i1, i2, tail))
    out.sort(key=BasisCommutator.sort_key)
    return out


def invariant_space_basis(n: int, d: int):
    """Exact basis of the degree-d invariants, by brute-force linear algebra.

    Lists the degree-d monomial basis of the whole algebra and solves
    sigma(f) = f for the two generators of S_n.
    """
    if d < 1:
        return []
    if d == 1:
        elems = [LieElement.variable(n, k) for k in range(1, n + 1)]

        def coords(e):
            return list(e.linear)

    else:
        basis = _basis_commutators(n, d)
        index = {c: k for k, c in enumerate(basis)}
        elems = [LieElement.from_commutator(n, c) for c in basis]

        def coords(e):
            vec = [_ZERO] * len(basis)
            for c, coeff in e.comm.items():
                vec[index[c]] = coeff
            return vec

    size = len(elems)
    if size == 0:
        return []
    rows = []
    for sigma in sn_generators(n):
        columns = [coords(apply_perm_lie(sigma, e)) for e in elems]
        for r in range(size):
            rows.append([columns[k][r] - (_ONE if k == r else _ZERO) for k in range(size)])
    out = []
    for vec in nullspace(rows, size):
        total = LieElement.zero(n)
        for k, coeff in enumerate(vec):
            if coeff != 0:
                total = total + elems[k] * coeff
        out.append(total)
    return out
