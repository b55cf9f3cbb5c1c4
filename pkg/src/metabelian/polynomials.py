"""Sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a finite map from exponent vectors (tuples of length nvars)
to nonzero Fraction coefficients, so every identity in the library is checked
exactly.  The monomial order used for canonical printing and for the
elementary-symmetric reduction is graded lexicographic with x1 > x2 > ... > xn.

Besides ring arithmetic this module provides the elementary symmetric
polynomials, the symmetry test on the two standard generators of S_n, the
group-averaging projector, and the rewriting of a symmetric polynomial as a
polynomial in e_1, ..., e_n (which is unique because the e_k are algebraically
independent).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .errors import (
    DimensionError,
    InternalConsistencyError,
    InvarianceError,
    RankError,
)
from .permutations import Permutation, enumerate_sn, sn_generators

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_fraction(value) -> Fraction:
    """Coerce an int or Fraction; floats are rejected to keep arithmetic exact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def grlex_key(exponents):
    """Sort key realizing graded lex order with x1 > x2 > ... > xn."""
    return (sum(exponents), exponents)


def default_names(nvars: int, prefix: str = "x"):
    return [f"{prefix}{k}" for k in range(1, nvars + 1)]


class Polynomial:
    """Sparse polynomial with exact rational coefficients in nvars variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        if nvars < 1:
            raise RankError(f"a polynomial ring needs at least one variable, got {nvars}")
        self.nvars = nvars
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                mono = tuple(mono)
                if len(mono) != nvars:
                    raise DimensionError(
                        f"exponent vector {mono} has length {len(mono)}, expected {nvars}"
                    )
                if any(e < 0 for e in mono):
                    raise DimensionError(f"negative exponent in {mono}")
                coeff = as_fraction(coeff)
                if coeff != 0:
                    clean[mono] = coeff
        self.terms = clean

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: _ONE})

    @classmethod
    def constant(cls, nvars: int, value) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: as_fraction(value)})

    @classmethod
    def variable(cls, nvars: int, k: int) -> "Polynomial":
        """The variable x_k (1-based)."""
        if not 1 <= k <= nvars:
            raise RankError(f"variable index {k} outside 1..{nvars}")
        mono = tuple(1 if i == k - 1 else 0 for i in range(nvars))
        return cls(nvars, {mono: _ONE})

    @classmethod
    def monomial(cls, nvars: int, exponents, coeff=1) -> "Polynomial":
        return cls(nvars, {tuple(exponents): as_fraction(coeff)})

    # basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, exponents) -> Fraction:
        return self.terms.get(tuple(exponents), _ZERO)

    def total_degree(self) -> int:
        """Largest total degree of a term, or -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def leading_monomial(self):
        """Graded-lex largest exponent vector, or None for zero."""
        if not self.terms:
            return None
        return max(self.terms, key=grlex_key)

    # ring operations

    def _require_same_ring(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise DimensionError(
                f"polynomials over {self.nvars} and {other.nvars} variables"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_ring(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            val = out.get(mono, _ZERO) + coeff
            if val == 0:
                out.pop(mono, None)
            else:
                out[mono] = val
        result = Polynomial.__new__(Polynomial)
        result.nvars = self.nvars
        result.terms = out
        return result

    def __neg__(self) -> "Polynomial":
        result = Polynomial.__new__(Polynomial)
        result.nvars = self.nvars
        result.terms = {m: -c for m, c in self.terms.items()}
        return result

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._require_same_ring(other)
            out = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    mono = tuple(a + b for a, b in zip(m1, m2))
                    val = out.get(mono, _ZERO) + c1 * c2
                    if val == 0:
                        out.pop(mono, None)
                    else:
                        out[mono] = val
            result = Polynomial.__new__(Polynomial)
            result.nvars = self.nvars
            result.terms = out
            return result
        coeff = as_fraction(other)
        if coeff == 0:
            return Polynomial.zero(self.nvars)
        result = Polynomial.__new__(Polynomial)
        result.nvars = self.nvars
        result.terms = {m: c * coeff for m, c in self.terms.items()}
        return result

    def __rmul__(self, other):
        return self * other

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise DimensionError("negative powers are not polynomials")
        result = Polynomial.one(self.nvars)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    __hash__ = None

    # structural operations

    def substitute(self, images) -> "Polynomial":
        """Substitute x_k -> images[k-1]; all images share one target ring."""
        images = list(images)
        if len(images) != self.nvars:
            raise DimensionError(
                f"need {self.nvars} substitution images, got {len(images)}"
            )
        target = images[0].nvars
        for img in images:
            if img.nvars != target:
                raise DimensionError("substitution images live in different rings")
        total = Polynomial.zero(target)
        for mono, coeff in self.terms.items():
            term = Polynomial.constant(target, coeff)
            for idx, e in enumerate(mono):
                if e:
                    term = term * images[idx] ** e
            total = total + term
        return total

    def apply_perm(self, sigma: Permutation) -> "Polynomial":
        """The ring automorphism induced by x_i -> x_{sigma(i)}."""
        if sigma.size != self.nvars:
            raise DimensionError(
                f"permutation of degree {sigma.size} on {self.nvars} variables"
            )
        img = sigma.images
        out = {}
        for mono, coeff in self.terms.items():
            new = [0] * self.nvars
            for idx, e in enumerate(mono):
                new[img[idx] - 1] = e
            out[tuple(new)] = coeff
        result = Polynomial.__new__(Polynomial)
        result.nvars = self.nvars
        result.terms = out
        return result

    # printing

    def to_text(self, names=None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = default_names(self.nvars)
        pieces = []
        for mono in sorted(self.terms, key=grlex_key, reverse=True):
            coeff = self.terms[mono]
            factors = []
            for idx, e in enumerate(mono):
                if e == 1:
                    factors.append(names[idx])
                elif e > 1:
                    factors.append(f"{names[idx]}^{e}")
            mag = -coeff if coeff < 0 else coeff
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return self.to_text()


@lru_cache(maxsize=None)
def elementary_symmetric(n: int, q: int) -> Polynomial:
    """e_q in n variables: the sum of all squarefree degree-q monomials.

    e_0 = 1, and e_q = 0 for q > n, matching the generating-function
    convention prod(1 + x_i t) = sum e_q t^q.
    """
    if n < 1:
        raise RankError(f"rank must be positive, got {n}")
    if q < 0:
        raise RankError(f"degree must be nonnegative, got {q}")
    if q == 0:
        return Polynomial.one(n)
    if q > n:
        return Polynomial.zero(n)
    terms = {}
    for subset in combinations(range(n), q):
        mono = [0] * n
        for i in subset:
            mono[i] = 1
        terms[tuple(mono)] = _ONE
    return Polynomial(n, terms)


def symmetry_violation(p: Polynomial):
    """A generator of S_n that moves p, or None if p is symmetric."""
    if p.nvars == 1:
        return None
    for sigma in sn_generators(p.nvars):
        if p.apply_perm(sigma) != p:
            return sigma
    return None


def is_symmetric(p: Polynomial) -> bool:
    """True iff p is fixed by (1 2) and (1 2 ... n), hence by all of S_n."""
    return symmetry_violation(p) is None


def reynolds_poly(p: Polynomial) -> Polynomial:
    """Average p over the full symmetric group; the projector onto symmetrics."""
    n = p.nvars
    if n == 1:
        return p
    total = Polynomial.zero(n)
    for sigma in enumerate_sn(n):
        total = total + p.apply_perm(sigma)
    return total * Fraction(1, factorial(n))


@lru_cache(maxsize=None)
def expand_e_monomial(n: int, exponents) -> Polynomial:
    """Expand e_1^{a_1} * ... * e_n^{a_n} into the plain polynomial ring."""
    exponents = tuple(exponents)
    if len(exponents) != n:
        raise DimensionError(f"exponent vector {exponents} has wrong length for rank {n}")
    result = Polynomial.one(n)
    for k, mult in enumerate(exponents, start=1):
        if mult:
            result = result * elementary_symmetric(n, k) ** mult
    return result


class EDecomposition:
    """A polynomial in the elementary symmetric polynomials e_1, ..., e_n.

    Stored as a map from exponent vectors on (e_1, ..., e_n) to rational
    coefficients; expanding and summing the e-monomials recovers the
    symmetric polynomial it represents.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise RankError(f"rank must be positive, got {n}")
        self.n = n
        clean = {}
        if terms:
            for vec, coeff in terms.items():
                vec = tuple(vec)
                if len(vec) != n or any(e < 0 for e in vec):
                    raise DimensionError(f"bad e-exponent vector {vec} for rank {n}")
                coeff = as_fraction(coeff)
                if coeff != 0:
                    clean[vec] = coeff
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def expand(self) -> Polynomial:
        total = Polynomial.zero(self.n)
        for vec, coeff in self.terms.items():
            total = total + expand_e_monomial(self.n, vec) * coeff
        return total

    def __add__(self, other: "EDecomposition") -> "EDecomposition":
        if self.n != other.n:
            raise DimensionError("e-decompositions of different ranks")
        out = dict(self.terms)
        for vec, coeff in other.terms.items():
            val = out.get(vec, _ZERO) + coeff
            if val == 0:
                out.pop(vec, None)
            else:
                out[vec] = val
        return EDecomposition(self.n, out)

    def __eq__(self, other):
        return (
            isinstance(other, EDecomposition)
            and self.n == other.n
            and self.terms == other.terms
        )

    __hash__ = None

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        names = default_names(self.n, prefix="e")
        proxy = Polynomial(self.n, self.terms)
        return proxy.to_text(names)

    def __repr__(self):
        return self.to_text()


def decompose_in_elementary(p: Polynomial) -> EDecomposition:
    """Rewrite a symmetric polynomial as a polynomial in e_1, ..., e_n.

    Classical leading-term reduction: the graded-lex leading exponent of a
    symmetric polynomial is a partition (l_1 >= ... >= l_n), and the product
    e_1^{l_1 - l_2} ... e_n^{l_n} has that same leading monomial with
    coefficient 1, so subtracting strictly lowers the leading term.
    """
    sigma = symmetry_violation(p)
    if sigma is not None:
        raise InvarianceError(f"polynomial is not symmetric: moved by {sigma}", sigma)
    n = p.nvars
    remaining = p
    out = {}
    while not remaining.is_zero():
        lead = remaining.leading_monomial()
        if any(lead[i] < lead[i + 1] for i in range(n - 1)):
            raise InternalConsistencyError(
                f"leading exponent {lead} of a symmetric polynomial is not a partition"
            )
        coeff = remaining.terms[lead]
        evec = tuple(
            lead[i] - (lead[i + 1] if i + 1 < n else 0) for i in range(n)
        )
        out[evec] = coeff
        remaining = remaining - expand_e_monomial(n, evec) * coeff
    return EDecomposition(n, out)
