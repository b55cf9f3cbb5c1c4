"""Canonical-form arithmetic in the free metabelian Lie algebra on x_1..x_n.

The commutator ideal has a linear basis of left-normed brackets

    [x_{i1}, x_{i2}, x_{i3}, ..., x_{id}]   with   i1 > i2 <= i3 <= ... <= id,

where [a, b, c] abbreviates [[a, b], c].  The factors past the first two
commute as operators on the commutator ideal, which turns it into a module
over the polynomial ring: acting by a monomial appends its variables as
ad-factors.  Every element is stored as a linear part plus a finite map from
basis commutators to rational coefficients, so equality is literal.

Rewriting into the basis uses four rules: bilinearity, antisymmetry, the
vanishing of brackets between two commutators, and the length-3 Jacobi
rearrangement [a, b, c] = [a, c, b] - [b, c, a], applied when a new ad-factor
is smaller than the second entry.  Each application strictly lowers the
number of order violations, so evaluating an expression tree bottom-up
terminates in the canonical form.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionError, DomainError, RankError
from .polynomials import Polynomial, as_fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class BasisCommutator:
    """A basis bracket, stored as the leading pair and the sorted ad-factors."""

    __slots__ = ("i1", "i2", "tail")

    def __init__(self, i1: int, i2: int, tail=()):
        tail = tuple(sorted(tail))
        if i2 < 1 or i1 <= i2 or (tail and tail[0] < i2):
            raise DomainError(
                f"indices ({i1}, {i2}, {tail}) violate the basis order i1 > i2 <= tail"
            )
        self.i1 = i1
        self.i2 = i2
        self.tail = tail

    @property
    def degree(self) -> int:
        return 2 + len(self.tail)

    def indices(self):
        """The flattened left-normed index sequence (i1, i2, tail...)."""
        return (self.i1, self.i2) + self.tail

    def sort_key(self):
        return (self.degree, self.i1, self.i2, self.tail)

    def max_index(self) -> int:
        return max(self.i1, self.tail[-1]) if self.tail else self.i1

    def __eq__(self, other):
        return (
            isinstance(other, BasisCommutator)
            and self.i1 == other.i1
            and self.i2 == other.i2
            and self.tail == other.tail
        )

    def __hash__(self):
        return hash((self.i1, self.i2, self.tail))

    def __repr__(self):
        return "[" + ",".join(f"x{i}" for i in self.indices()) + "]"


def _ad_one(c: BasisCommutator, j: int):
    """Append one ad-factor x_j to a basis commutator.

    When j >= i2 the factor slots into the tail.  Otherwise the Jacobi
    rearrangement [i1, i2, j] = [i1, j, i2] - [i2, j, i1] applies; both
    results are already in basis order because j is the new minimum.
    """
    if j >= c.i2:
        return ((BasisCommutator(c.i1, c.i2, c.tail + (j,)), 1),)
    return (
        (BasisCommutator(c.i1, j, c.tail + (c.i2,)), 1),
        (BasisCommutator(c.i2, j, c.tail + (c.i1,)), -1),
    )


def _ad_monomial(c: BasisCommutator, exponents):
    """Act on a basis commutator by a monomial; returns dict commutator -> coeff.

    Variables are applied in increasing index order: after the first Jacobi
    split the second entry is minimal, so later factors never split again and
    the result has at most two terms.
    """
    current = {c: _ONE}
    for idx, e in enumerate(exponents):
        j = idx + 1
        for _ in range(e):
            nxt = {}
            for cc, coeff in current.items():
                for c2, sign in _ad_one(cc, j):
                    val = nxt.get(c2, _ZERO) + coeff * sign
                    if val == 0:
                        nxt.pop(c2, None)
                    else:
                        nxt[c2] = val
            current = nxt
    return current


class LieElement:
    """An element of the free metabelian Lie algebra in canonical basis form."""

    __slots__ = ("n", "linear", "comm")

    def __init__(self, n: int, linear=None, comm=None):
        if n < 1:
            raise RankError(f"rank must be positive, got {n}")
        self.n = n
        if linear is None:
            self.linear = (_ZERO,) * n
        else:
            linear = tuple(as_fraction(v) for v in linear)
            if len(linear) != n:
                raise DimensionError(f"linear part has length {len(linear)}, expected {n}")
            self.linear = linear
        clean = {}
        if comm:
            for c, coeff in comm.items():
                if c.max_index() > n:
                    raise RankError(f"commutator {c} uses a variable beyond x{n}")
                coeff = as_fraction(coeff)
                if coeff != 0:
                    clean[c] = coeff
        self.comm = clean

    @classmethod
    def zero(cls, n: int) -> "LieElement":
        return cls(n)

    @classmethod
    def variable(cls, n: int, k: int) -> "LieElement":
        if not 1 <= k <= n:
            raise RankError(f"variable index {k} outside 1..{n}")
        return cls(n, tuple(_ONE if i == k - 1 else _ZERO for i in range(n)))

    @classmethod
    def from_commutator(cls, n: int, c: BasisCommutator, coeff=1) -> "LieElement":
        return cls(n, None, {c: as_fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.comm and all(v == 0 for v in self.linear)

    def linear_is_zero(self) -> bool:
        return all(v == 0 for v in self.linear)

    def commutator_part(self) -> "LieElement":
        return LieElement(self.n, None, self.comm)

    def degrees(self):
        """Sorted list of homogeneous degrees present."""
        out = set()
        if not self.linear_is_zero():
            out.add(1)
        out.update(c.degree for c in self.comm)
        return sorted(out)

    def __add__(self, other: "LieElement") -> "LieElement":
        if self.n != other.n:
            raise DimensionError(f"ranks {self.n} and {other.n} differ")
        linear = tuple(a + b for a, b in zip(self.linear, other.linear))
        comm = dict(self.comm)
        for c, coeff in other.comm.items():
            val = comm.get(c, _ZERO) + coeff
            if val == 0:
                comm.pop(c, None)
            else:
                comm[c] = val
        out = LieElement.__new__(LieElement)
        out.n = self.n
        out.linear = linear
        out.comm = comm
        return out

    def __neg__(self) -> "LieElement":
        out = LieElement.__new__(LieElement)
        out.n = self.n
        out.linear = tuple(-v for v in self.linear)
        out.comm = {c: -v for c, v in self.comm.items()}
        return out

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __mul__(self, scalar) -> "LieElement":
        scalar = as_fraction(scalar)
        if scalar == 0:
            return LieElement.zero(self.n)
        out = LieElement.__new__(LieElement)
        out.n = self.n
        out.linear = tuple(v * scalar for v in self.linear)
        out.comm = {c: v * scalar for c, v in self.comm.items()}
        return out

    def __rmul__(self, scalar):
        return self * scalar

    def __eq__(self, other):
        return (
            isinstance(other, LieElement)
            and self.n == other.n
            and self.linear == other.linear
            and self.comm == other.comm
        )

    __hash__ = None

    def to_text(self) -> str:
        pieces = []
        for idx, coeff in enumerate(self.linear):
            if coeff != 0:
                pieces.append((coeff, f"x{idx + 1}"))
        for c in sorted(self.comm, key=BasisCommutator.sort_key):
            pieces.append((self.comm[c], repr(c)))
        if not pieces:
            return "0"
        chunks = []
        for coeff, body in pieces:
            mag = -coeff if coeff < 0 else coeff
            text = body if mag == 1 else f"{mag}*{body}"
            chunks.append(("-" if coeff < 0 else "+", text))
        sign, body = chunks[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return self.to_text()


def bracket(f: LieElement, g: LieElement) -> LieElement:
    """The Lie bracket [f, g], returned in canonical basis form.

    Brackets between two commutator-ideal elements vanish (the algebra is
    metabelian); the remaining pieces reduce to pair brackets of variables
    and single ad-factor applications.
    """
    if f.n != g.n:
        raise DimensionError(f"ranks {f.n} and {g.n} differ")
    n = f.n
    acc = {}

    def add(c, value):
        val = acc.get(c, _ZERO) + value
        if val == 0:
            acc.pop(c, None)
        else:
            acc[c] = val

    for i in range(1, n + 1):
        a = f.linear[i - 1]
        if a == 0:
            continue
        for j in range(1, n + 1):
            b = g.linear[j - 1]
            if b == 0 or i == j:
                continue
            if i > j:
                add(BasisCommutator(i, j), a * b)
            else:
                add(BasisCommutator(j, i), -a * b)
    for c, coeff in f.comm.items():
        for j in range(1, n + 1):
            b = g.linear[j - 1]
            if b == 0:
                continue
            for c2, sign in _ad_one(c, j):
                add(c2, coeff * b * sign)
    for c, coeff in g.comm.items():
        for j in range(1, n + 1):
            a = f.linear[j - 1]
            if a == 0:
                continue
            for c2, sign in _ad_one(c, j):
                add(c2, -coeff * a * sign)
    return LieElement(n, None, acc)


def ad_action(f: LieElement, p: Polynomial) -> LieElement:
    """The polynomial-ring module action f * p(ad x_1, ..., ad x_n).

    Defined on the commutator ideal only; ad-factors commute there, so the
    action by a polynomial is well defined monomial by monomial.
    """
    if not f.linear_is_zero():
        raise DomainError("the polynomial action is defined on the commutator ideal only")
    if p.nvars != f.n:
        raise DimensionError(f"polynomial over {p.nvars} variables, rank is {f.n}")
    acc = {}
    for c, gamma in f.comm.items():
        for mono, beta in p.terms.items():
            scale = gamma * beta
            for c2, value in _ad_monomial(c, mono).items():
                val = acc.get(c2, _ZERO) + scale * value
                if val == 0:
                    acc.pop(c2, None)
                else:
                    acc[c2] = val
    return LieElement(f.n, None, acc)


def apply_perm_lie(sigma, f: LieElement) -> LieElement:
    """The algebra automorphism induced by x_i -> x_{sigma(i)}, renormalized."""
    if sigma.size != f.n:
        raise DimensionError(f"permutation degree {sigma.size}, rank {f.n}")
    n = f.n
    linear = [_ZERO] * n
    for idx, coeff in enumerate(f.linear):
        linear[sigma(idx + 1) - 1] = coeff
    acc = {}
    for c, gamma in f.comm.items():
        a, b = sigma(c.i1), sigma(c.i2)
        sign = 1
        if a < b:
            a, b = b, a
            sign = -1
        exponents = [0] * n
        for t in c.tail:
            exponents[sigma(t) - 1] += 1
        for c2, value in _ad_monomial(BasisCommutator(a, b), exponents).items():
            val = acc.get(c2, _ZERO) + gamma * sign * value
            if val == 0:
                acc.pop(c2, None)
            else:
                acc[c2] = val
    return LieElement(n, linear, acc)


def grade(f: LieElement, d: int) -> LieElement:
    """The homogeneous component of total degree d (variables have degree 1)."""
    if d == 1:
        return LieElement(f.n, f.linear)
    if d < 1:
        return LieElement.zero(f.n)
    return LieElement(f.n, None, {c: v for c, v in f.comm.items() if c.degree == d})


# expression trees -----------------------------------------------------------

class LieExpr:
    """Abstract syntax for Lie expressions fed to normal_form."""

    __slots__ = ()


class Var(LieExpr):
    __slots__ = ("index",)

    def __init__(self, index: int):
        self.index = index

    def __repr__(self):
        return f"x{self.index}"


class Sum(LieExpr):
    __slots__ = ("parts",)

    def __init__(self, parts):
        self.parts = tuple(parts)

    def __repr__(self):
        return "(" + " + ".join(repr(p) for p in self.parts) + ")" if self.parts else "0"


class Scale(LieExpr):
    __slots__ = ("coeff", "part")

    def __init__(self, coeff, part: LieExpr):
        self.coeff = as_fraction(coeff)
        self.part = part

    def __repr__(self):
        return f"{self.coeff}*{self.part!r}"


class Bracket(LieExpr):
    __slots__ = ("left", "right")

    def __init__(self, left: LieExpr, right: LieExpr):
        self.left = left
        self.right = right

    def __repr__(self):
        return f"[{self.left!r},{self.right!r}]"


class Ad(LieExpr):
    """Postfix application of a polynomial in the ad-operators."""

    __slots__ = ("part", "poly")

    def __init__(self, part: LieExpr, poly: Polynomial):
        self.part = part
        self.poly = poly

    def __repr__(self):
        return f"{self.part!r} ad({self.poly!r})"


def normal_form(expr: LieExpr, n: int) -> LieElement:
    """Evaluate an expression tree to the unique canonical basis form."""
    if isinstance(expr, Var):
        return LieElement.variable(n, expr.index)
    if isinstance(expr, Sum):
        total = LieElement.zero(n)
        for part in expr.parts:
            total = total + normal_form(part, n)
        return total
    if isinstance(expr, Scale):
        return normal_form(expr.part, n) * expr.coeff
    if isinstance(expr, Bracket):
        return bracket(normal_form(expr.left, n), normal_form(expr.right, n))
    if isinstance(expr, Ad):
        return ad_action(normal_form(expr.part, n), expr.poly)
    raise TypeError(f"not a Lie expression node: {type(expr).__name__}")
