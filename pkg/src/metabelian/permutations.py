"""Permutations of {1, ..., n} and generating sets of the symmetric group."""

from __future__ import annotations

import re
from itertools import permutations as _all_tuples
from math import factorial

from .errors import ParseError, RankError, ResourceGuardError

# Full enumeration is used for Reynolds averaging; 8! = 40320 keeps it fast.
ENUMERATION_CAP = 8


class Permutation:
    """A bijection of {1, ..., n} stored as its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise RankError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        if not (1 <= a <= n and 1 <= b <= n):
            raise RankError(f"transposition ({a} {b}) does not fit degree {n}")
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(images)

    @classmethod
    def full_cycle(cls, n: int) -> "Permutation":
        """The n-cycle (1 2 ... n), mapping i to i + 1 and n to 1."""
        return cls(list(range(2, n + 1)) + [1])

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.images):
            raise RankError(f"point {i} outside 1..{len(self.images)}")
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(i) = self(other(i))."""
        if self.size != other.size:
            raise RankError("cannot compose permutations of different degrees")
        return Permutation(self.images[j - 1] for j in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def cycles(self):
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(i) for i in c) + ")" for c in cycs)


def sn_generators(n: int):
    """The transposition (1 2) and the n-cycle (1 2 ... n); they generate S_n."""
    if n < 2:
        raise RankError(f"the symmetric group generators need n >= 2, got {n}")
    return [Permutation.transposition(n, 1, 2), Permutation.full_cycle(n)]


def enumerate_sn(n: int):
    """Yield every permutation of {1, ..., n} exactly once (n! of them)."""
    if n < 1:
        raise RankError(f"degree must be positive, got {n}")
    if n > ENUMERATION_CAP:
        raise ResourceGuardError(
            f"refusing to enumerate S_{n} ({factorial(n)} elements); cap is {ENUMERATION_CAP}"
        )
    for images in _all_tuples(range(1, n + 1)):
        yield Permutation(images)


_CYCLE_TOKEN = re.compile(r"\s*(\(|\)|\d+|,)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation such as ``(1 2)(3 4)`` into a permutation of degree n.

    Cycles are composed right to left, so non-disjoint products follow the
    usual function-composition convention. ``()`` is the identity.
    """
    pos = 0
    cycles = []
    current = None
    while pos < len(text):
        m = _CYCLE_TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r} in cycle notation", pos)
        tok = m.group(1)
        if tok == "(":
            if current is not None:
                raise ParseError("nested '(' in cycle notation", m.start(1))
            current = []
        elif tok == ")":
            if current is None:
                raise ParseError("unmatched ')' in cycle notation", m.start(1))
            cycles.append(current)
            current = None
        elif tok == ",":
            if current is None:
                raise ParseError("',' outside a cycle", m.start(1))
        else:
            if current is None:
                raise ParseError("point outside a cycle", m.start(1))
            point = int(tok)
            if not 1 <= point <= n:
                raise ParseError(f"point {point} outside 1..{n}", m.start(1))
            if point in current:
                raise ParseError(f"point {point} repeated inside a cycle", m.start(1))
            current.append(point)
        pos = m.end()
    if current is not None:
        raise ParseError("unterminated cycle", pos)
    # compose right to left: the rightmost cycle acts first
    result = Permutation.identity(n)
    for cyc in reversed(cycles):
        images = list(range(1, n + 1))
        for k, point in enumerate(cyc):
            images[point - 1] = cyc[(k + 1) % len(cyc)]
        result = Permutation(images) * result
    return result
