"""The quandle of fractions Q ∪ {1/0} under the transvection operation,
the symplectic operation on Z⊕Z it projects from, and the matching
PSL(2, Z) matrices.

A point is a ±-projective primitive integer pair (p, q), canonically signed
so that q > 0, or q = 0 and p = 1.  All arithmetic is exact on unbounded
integers; the transvection (a/b) * (c/d) = (a - Dc)/(b - Dd) with
D = ad - bc grows coefficients quadratically, so fixed-width integers would
silently corrupt results.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

IntPair = tuple[int, int]

_FRAC_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


@dataclass(frozen=True)
class PFrac:
    """A canonical projective primitive pair: gcd(|p|, |q|) = 1 and either
    q > 0 or (q, p) = (0, 1).  The point 1/0 is infinity; 0 is 0/1."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if (self.p, self.q) == (0, 0):
            raise ValueError("the zero pair has no projective class")
        if gcd(abs(self.p), abs(self.q)) != 1:
            raise ValueError(f"({self.p}, {self.q}) is not reduced")
        if self.q < 0 or (self.q == 0 and self.p != 1):
            raise ValueError(f"({self.p}, {self.q}) is not canonically signed")

    @property
    def is_infinity(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"

    def to_fraction(self) -> Fraction:
        if self.is_infinity:
            raise ValueError("1/0 is not a finite rational")
        return Fraction(self.p, self.q)

    def to_json(self) -> dict:
        return {"p": str(self.p), "q": str(self.q)}

    @classmethod
    def from_json(cls, data: dict) -> "PFrac":
        return pf_new(int(data["p"]), int(data["q"]))

    @classmethod
    def from_fraction(cls, r: Fraction) -> "PFrac":
        return pf_new(r.numerator, r.denominator)

    @classmethod
    def parse(cls, text: str) -> "PFrac":
        m = _FRAC_RE.match(text.strip())
        if not m:
            raise ValueError(f"not a fraction: {text!r}")
        p = int(m.group(1))
        q = int(m.group(2)) if m.group(2) is not None else 1
        return pf_new(p, q)


def pf_new(p: int, q: int) -> PFrac:
    """Reduce and canonically sign an integer pair; the zero pair is an error."""
    if p == 0 and q == 0:
        raise ValueError("the zero pair has no projective class")
    g = gcd(abs(p), abs(q))
    p //= g
    q //= g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return PFrac(p, q)


PF_ZERO = pf_new(0, 1)
PF_INFINITY = pf_new(1, 0)


def pf_op(x: PFrac, y: PFrac) -> PFrac:
    """(a/b) * (c/d) = (a - Dc)/(b - Dd) with D = ad - bc."""
    d = x.p * y.q - x.q * y.p
    return pf_new(x.p - d * y.p, x.q - d * y.q)


def pf_op_inv(x: PFrac, y: PFrac) -> PFrac:
    """The inverse operation: (a/b) *̄ (c/d) = (a + Dc)/(b + Dd)."""
    d = x.p * y.q - x.q * y.p
    return pf_new(x.p + d * y.p, x.q + d * y.q)


def pf_op_pow(x: PFrac, y: PFrac, k: int) -> PFrac:
    """x * y^k in closed form: (p - kDs, q - kDt) for y = s/t, D = pt - sq.

    Equals k-fold application of pf_op for k > 0, of pf_op_inv for k < 0,
    and x for k = 0.
    """
    d = x.p * y.q - x.q * y.p
    return pf_new(x.p - k * d * y.p, x.q - k * d * y.q)


# ---------------------------------------------------------------------------
# the symplectic operation on all of Z⊕Z
# ---------------------------------------------------------------------------

def sympl_form(x: IntPair, y: IntPair) -> int:
    """The determinant form <(a,b), (c,d)> = ad - bc."""
    return x[0] * y[1] - x[1] * y[0]


def sympl_op(x: IntPair, y: IntPair) -> IntPair:
    """(a, b) * (c, d) = (a - Dc, b - Dd); defined on every pair, including
    zero and imprimitive vectors."""
    d = sympl_form(x, y)
    return (x[0] - d * y[0], x[1] - d * y[1])


def sympl_op_inv(x: IntPair, y: IntPair) -> IntPair:
    d = sympl_form(x, y)
    return (x[0] + d * y[0], x[1] + d * y[1])


def is_primitive(x: IntPair) -> bool:
    """True when gcd(|u|, |v|) = 1 (with gcd(0, k) = |k|)."""
    return gcd(abs(x[0]), abs(x[1])) == 1


def projectivize(x: IntPair) -> PFrac:
    """The projective class of a primitive nonzero pair."""
    if x == (0, 0):
        raise ValueError("the zero vector has no projective class")
    if not is_primitive(x):
        raise ValueError(f"{x} is not primitive")
    return pf_new(x[0], x[1])


# ---------------------------------------------------------------------------
# transvection matrices in PSL(2, Z)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TransvectionMatrix:
    """A determinant-one integer 2x2 matrix, compared as a class in
    PSL(2, Z): a matrix and its negation are equal."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.det() != 1:
            raise ValueError(f"determinant must be 1, got {self.det()}")

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def _canonical(self) -> tuple[int, int, int, int]:
        entries = (self.a, self.b, self.c, self.d)
        for x in entries:
            if x != 0:
                return entries if x > 0 else tuple(-v for v in entries)
        return entries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TransvectionMatrix):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def transvection_matrix(y: PFrac) -> TransvectionMatrix:
    """The matrix of *y for y = (c, d): [[1 - dc, c^2], [-d^2, 1 + dc]]."""
    c, d = y.p, y.q
    return TransvectionMatrix(1 - d * c, c * c, -d * d, 1 + d * c)


def apply_matrix(m: TransvectionMatrix, x: PFrac) -> PFrac:
    """Apply a determinant-one matrix to a projective point."""
    return pf_new(m.a * x.p + m.b * x.q, m.c * x.p + m.d * x.q)


# ---------------------------------------------------------------------------
# orbit exploration from the two generators
# ---------------------------------------------------------------------------

_GENERATOR_STEPS = (
    ("a", PF_ZERO, pf_op),
    ("A", PF_ZERO, pf_op_inv),
    ("b", PF_INFINITY, pf_op),
    ("B", PF_INFINITY, pf_op_inv),
)


@dataclass(frozen=True)
class OrbitReport:
    """Breadth-first closure of {0/1, 1/0} under the four generator steps,
    restricted to canonical representatives with |p|, |q| <= bound."""

    bound: int
    explored: int
    witnesses: dict  # PFrac -> witness word text
    reached: dict    # target PFrac -> witness word text
    unreached: tuple
    edges: tuple     # BFS tree edges (source PFrac, letter, target PFrac)

    def all_reached(self) -> bool:
        return not self.unreached

    def to_dot(self) -> str:
        lines = ["digraph orbit {"]
        for src in sorted(self.witnesses, key=lambda f: (f.q, f.p)):
            lines.append(f'  "{src}";')
        for src, letter, dst in self.edges:
            lines.append(f'  "{src}" -> "{dst}" [label="{letter}"];')
        lines.append("}")
        return "\n".join(lines)


def orbit_bfs(targets: Iterable[PFrac], bound: int) -> OrbitReport:
    """Explore the orbit of {0/1, 1/0} under * and *̄ by 0/1 and 1/0,
    visiting only fractions with |p|, |q| <= bound, and report which targets
    were reached together with a witness word for each."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    targets = tuple(targets)
    witnesses: dict[PFrac, str] = {PF_ZERO: "a", PF_INFINITY: "b"}
    edges: list[tuple[PFrac, str, PFrac]] = []
    queue = deque([PF_ZERO, PF_INFINITY])
    while queue:
        x = queue.popleft()
        word = witnesses[x]
        for letter, gen, step in _GENERATOR_STEPS:
            y = step(x, gen)
            if abs(y.p) > bound or abs(y.q) > bound:
                continue
            if y not in witnesses:
                witnesses[y] = word + letter
                edges.append((x, letter, y))
                queue.append(y)
    reached = {t: witnesses[t] for t in targets if t in witnesses}
    unreached = tuple(t for t in targets if t not in witnesses)
    return OrbitReport(
        bound=bound,
        explored=len(witnesses),
        witnesses=witnesses,
        reached=reached,
        unreached=unreached,
        edges=tuple(edges),
    )
