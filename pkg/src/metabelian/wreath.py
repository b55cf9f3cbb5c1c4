"""The abelian wreath product carrying the faithful embedding of the algebra.

Elements have the shape  w = sum_i u_i p_i(x_1..x_n) + sum_i a_i v_i  with
polynomial u-coefficients and scalar v-coefficients.  The bracket is

    [W, W] = [V, V] = 0,      [u_i p, v_j] = u_i p x_j,

and the embedding sends x_i to u_i + v_i.  A commutator [x_i, x_j] (i > j)
lands on u_i x_j - u_j x_i, and acting by a polynomial multiplies the
u-coefficients, so the embedded image of the commutator ideal is exactly the
kernel of (p_1, ..., p_n) -> sum_i x_i p_i with zero v-part.  The preimage
map inverts the embedding constructively by clearing one leading monomial
class at a time.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DimensionError,
    DomainError,
    InternalConsistencyError,
    MembershipError,
    RankError,
)
from .lie import BasisCommutator, LieElement, _ad_monomial
from .polynomials import Polynomial, as_fraction, grlex_key

_ZERO = Fraction(0)
_ONE = Fraction(1)


class WreathElement:
    """n polynomial u-coefficients plus n scalar v-coefficients."""

    __slots__ = ("n", "upart", "vpart")

    def __init__(self, n: int, upart=None, vpart=None):
        if n < 1:
            raise RankError(f"rank must be positive, got {n}")
        self.n = n
        if upart is None:
            self.upart = tuple(Polynomial.zero(n) for _ in range(n))
        else:
            upart = tuple(upart)
            if len(upart) != n:
                raise DimensionError(f"{len(upart)} u-coefficients, expected {n}")
            for p in upart:
                if p.nvars != n:
                    raise DimensionError(
                        f"u-coefficient over {p.nvars} variables, expected {n}"
                    )
            self.upart = upart
        if vpart is None:
            self.vpart = (_ZERO,) * n
        else:
            vpart = tuple(as_fraction(v) for v in vpart)
            if len(vpart) != n:
                raise DimensionError(f"{len(vpart)} v-coefficients, expected {n}")
            self.vpart = vpart

    @classmethod
    def zero(cls, n: int) -> "WreathElement":
        return cls(n)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.upart) and all(v == 0 for v in self.vpart)

    def vpart_is_zero(self) -> bool:
        return all(v == 0 for v in self.vpart)

    def _require_same(self, other: "WreathElement"):
        if self.n != other.n:
            raise DimensionError(f"ranks {self.n} and {other.n} differ")

    def __add__(self, other: "WreathElement") -> "WreathElement":
        self._require_same(other)
        return WreathElement(
            self.n,
            tuple(p + q for p, q in zip(self.upart, other.upart)),
            tuple(a + b for a, b in zip(self.vpart, other.vpart)),
        )

    def __neg__(self) -> "WreathElement":
        return WreathElement(
            self.n,
            tuple(-p for p in self.upart),
            tuple(-v for v in self.vpart),
        )

    def __sub__(self, other: "WreathElement") -> "WreathElement":
        return self + (-other)

    def __mul__(self, scalar) -> "WreathElement":
        scalar = as_fraction(scalar)
        return WreathElement(
            self.n,
            tuple(p * scalar for p in self.upart),
            tuple(v * scalar for v in self.vpart),
        )

    def __rmul__(self, scalar):
        return self * scalar

    def module_mul(self, p: Polynomial) -> "WreathElement":
        """Right action of the polynomial ring on the u-ideal."""
        if not self.vpart_is_zero():
            raise DomainError("the polynomial action is defined on the u-ideal only")
        if p.nvars != self.n:
            raise DimensionError(f"polynomial over {p.nvars} variables, rank {self.n}")
        return WreathElement(self.n, tuple(q * p for q in self.upart))

    def __eq__(self, other):
        return (
            isinstance(other, WreathElement)
            and self.n == other.n
            and self.upart == other.upart
            and self.vpart == other.vpart
        )

    __hash__ = None

    def pi_polynomial(self) -> Polynomial:
        """The image in the 2n-variable ring K[u_1..u_n, x_1..x_n] modulo u*u.

        u-variables occupy the first n slots, x-variables the last n; the
        v-part is identified with its linear x-polynomial.
        """
        n = self.n
        terms = {}
        for i, p in enumerate(self.upart):
            for mono, coeff in p.terms.items():
                umono = tuple(1 if k == i else 0 for k in range(n))
                terms[umono + mono] = coeff
        for i, coeff in enumerate(self.vpart):
            if coeff != 0:
                xmono = tuple(1 if k == n + i else 0 for k in range(2 * n))
                terms[xmono] = terms.get(xmono, _ZERO) + coeff
        return Polynomial(2 * n, terms)

    def to_text(self) -> str:
        chunks = []
        for i, p in enumerate(self.upart):
            if not p.is_zero():
                chunks.append(("+", f"u{i + 1}*( {p.to_text()} )"))
        for i, coeff in enumerate(self.vpart):
            if coeff != 0:
                mag = -coeff if coeff < 0 else coeff
                body = f"v{i + 1}" if mag == 1 else f"{mag}*v{i + 1}"
                chunks.append(("-" if coeff < 0 else "+", body))
        if not chunks:
            return "0"
        sign, body = chunks[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return self.to_text()


def bracket_wreath(w1: WreathElement, w2: WreathElement) -> WreathElement:
    """Bracket in the wreath product; the result always has zero v-part."""
    w1._require_same(w2)
    n = w1.n
    lin1 = Polynomial(n, {tuple(1 if k == i else 0 for k in range(n)): c
                          for i, c in enumerate(w1.vpart) if c != 0})
    lin2 = Polynomial(n, {tuple(1 if k == i else 0 for k in range(n)): c
                          for i, c in enumerate(w2.vpart) if c != 0})
    upart = tuple(
        w1.upart[i] * lin2 - w2.upart[i] * lin1 for i in range(n)
    )
    return WreathElement(n, upart)


def embed(f: LieElement) -> WreathElement:
    """The faithful homomorphism determined by x_i -> u_i + v_i."""
    n = f.n
    udicts = [{} for _ in range(n)]
    zero_mono = (0,) * n
    for idx, coeff in enumerate(f.linear):
        if coeff != 0:
            udicts[idx][zero_mono] = coeff
    for c, gamma in f.comm.items():
        mono = [0] * n
        for t in c.tail:
            mono[t - 1] += 1
        m1 = list(mono)
        m1[c.i2 - 1] += 1
        m2 = list(mono)
        m2[c.i1 - 1] += 1
        for target, m, sign in ((c.i1 - 1, tuple(m1), 1), (c.i2 - 1, tuple(m2), -1)):
            d = udicts[target]
            val = d.get(m, _ZERO) + gamma * sign
            if val == 0:
                d.pop(m, None)
            else:
                d[m] = val
    return WreathElement(
        n,
        tuple(Polynomial(n, d) for d in udicts),
        f.linear,
    )


def membership_residual(w: WreathElement) -> Polynomial:
    """sum_i x_i p_i(x); zero exactly on the embedded commutator ideal."""
    total = Polynomial.zero(w.n)
    for i, p in enumerate(w.upart):
        total = total + p * Polynomial.variable(w.n, i + 1)
    return total


def in_commutator_image(w: WreathElement) -> bool:
    """True iff w is the embedded image of a commutator-ideal element."""
    return w.vpart_is_zero() and membership_residual(w).is_zero()


def substitute_u_equals_x(w: WreathElement) -> Polynomial:
    """Evaluate u_i -> x_i (and v_i -> x_i): sum x_i p_i + sum a_i x_i."""
    total = membership_residual(w)
    extra = {}
    for i, coeff in enumerate(w.vpart):
        if coeff != 0:
            mono = tuple(1 if k == i else 0 for k in range(w.n))
            extra[mono] = coeff
    return total + Polynomial(w.n, extra)


def preimage(w: WreathElement) -> LieElement:
    """Invert the embedding; raises MembershipError off the image.

    The v-part dictates the linear part.  The remaining u-part must satisfy
    sum_i x_i p_i = 0; while it is nonzero, the graded-lex largest product
    monomial M = x_i * m is selected, the indices contributing to M have
    coefficients summing to zero, and subtracting multiples of
    embed([x_a, x_b] * M/(x_a x_b)) for the smallest contributing index b
    clears the whole class.  M strictly decreases, so this terminates; the
    recorded commutator terms assemble the canonical preimage.
    """
    n = w.n
    linear = w.vpart
    zero_mono = (0,) * n
    work = []
    for i, p in enumerate(w.upart):
        d = dict(p.terms)
        if linear[i] != 0:
            val = d.get(zero_mono, _ZERO) - linear[i]
            if val == 0:
                d.pop(zero_mono, None)
            else:
                d[zero_mono] = val
        work.append(d)
    residual = Polynomial.zero(n)
    for i, d in enumerate(work):
        residual = residual + Polynomial(n, d) * Polynomial.variable(n, i + 1)
    if not residual.is_zero():
        raise MembershipError(
            f"element is not in the embedded image; residual sum x_i*p_i = {residual}",
            residual,
        )
    acc = {}
    while True:
        best = None
        for i, d in enumerate(work):
            for mono in d:
                content = list(mono)
                content[i] += 1
                content = tuple(content)
                if best is None or grlex_key(content) > grlex_key(best):
                    best = content
        if best is None:
            break
        contributors = []
        for i in range(n):
            if best[i] >= 1:
                sub = list(best)
                sub[i] -= 1
                coeff = work[i].get(tuple(sub), _ZERO)
                if coeff != 0:
                    contributors.append((i, coeff))
        if len(contributors) < 2 or sum(c for _, c in contributors) != 0:
            raise InternalConsistencyError(
                f"monomial class {best} cannot be cleared despite zero residual"
            )
        b = contributors[0][0]
        mono_b = list(best)
        mono_b[b] -= 1
        mono_b = tuple(mono_b)
        for a, coeff in contributors[1:]:
            mono_a = list(best)
            mono_a[a] -= 1
            mono_a = tuple(mono_a)
            m_ab = list(best)
            m_ab[a] -= 1
            m_ab[b] -= 1
            # remove coeff * embed([x_{a+1}, x_{b+1}] * m_ab)
            work[a].pop(mono_a)
            val = work[b].get(mono_b, _ZERO) + coeff
            if val == 0:
                work[b].pop(mono_b, None)
            else:
                work[b][mono_b] = val
            base = BasisCommutator(a + 1, b + 1)
            for c2, value in _ad_monomial(base, m_ab).items():
                cur = acc.get(c2, _ZERO) + coeff * value
                if cur == 0:
                    acc.pop(c2, None)
                else:
                    acc[c2] = cur
    return LieElement(n, linear, acc)


def apply_perm_wreath(sigma, w: WreathElement) -> WreathElement:
    """Permute u-indices, v-indices, and x-variables simultaneously."""
    if sigma.size != w.n:
        raise DimensionError(f"permutation degree {sigma.size}, rank {w.n}")
    n = w.n
    upart = [None] * n
    vpart = [_ZERO] * n
    for i in range(n):
        upart[sigma(i + 1) - 1] = w.upart[i].apply_perm(sigma)
        vpart[sigma(i + 1) - 1] = w.vpart[i]
    return WreathElement(n, tuple(upart), tuple(vpart))
