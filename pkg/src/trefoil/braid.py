"""Exact arithmetic in the three-strand braid group B3 = <a, b | aba = bab>.

Equality is decided through a faithful 2x2 matrix representation over
integer Laurent polynomials:

    a -> [[-t, 1], [0, 1]]        b -> [[1, 0], [t, -t]]

Faithfulness of this representation for three strands is a known external
fact; the test suite cross-validates it against an independent Garside-style
normal form on short words, and every generator image has unit determinant
(+-t^k), so inverses stay exact.

Words are stored as given; free reduction is applied only when rendering.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence, Union


# ---------------------------------------------------------------------------
# Laurent polynomials in one variable over Z
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LaurentPoly:
    """An integer Laurent polynomial, stored as the lowest exponent plus a
    coefficient tuple with nonzero outer entries (zero is (0, ()))."""

    low: int
    coeffs: tuple[int, ...]

    @classmethod
    def make(cls, low: int, coeffs: Sequence[int]) -> "LaurentPoly":
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        shift = 0
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            shift += 1
        if not coeffs:
            return cls(0, ())
        return cls(low + shift, tuple(coeffs))

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.make(0, [c])

    @classmethod
    def monomial(cls, c: int, exp: int) -> "LaurentPoly":
        return cls.make(exp, [c])

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.low, other.low)
        high = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        out = [0] * (high - low)
        for i, c in enumerate(self.coeffs):
            out[self.low - low + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - low + i] += c
        return LaurentPoly.make(low, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero() or other.is_zero():
            return _LP_ZERO
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for j, cb in enumerate(b):
            if cb:
                for i, ca in enumerate(a):
                    out[i + j] += ca * cb
        return LaurentPoly.make(self.low + other.low, out)

    def shifted(self, exp: int, sign: int = 1) -> "LaurentPoly":
        """Multiply by sign * t^exp."""
        if self.is_zero():
            return self
        coeffs = self.coeffs if sign == 1 else tuple(-c for c in self.coeffs)
        return LaurentPoly(self.low + exp, coeffs)

    def as_unit(self) -> tuple[int, int]:
        """Decompose as sign * t^exp, or fail if not a unit monomial."""
        if len(self.coeffs) == 1 and self.coeffs[0] in (1, -1):
            return (self.coeffs[0], self.low)
        raise ValueError(f"{self} is not a unit of Z[t, 1/t]")

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.low + i
            if e == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                sign = "-" if c < 0 else ""
                term = f"{sign}{mag}t" if e == 1 else f"{sign}{mag}t^{e}"
            parts.append(term)
        text = parts[0]
        for term in parts[1:]:
            text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return text


_LP_ZERO = LaurentPoly(0, ())
_LP_ONE = LaurentPoly(0, (1,))
_LP_T = LaurentPoly(1, (1,))


@dataclass(frozen=True)
class LaurentMatrix:
    """A 2x2 matrix of integer Laurent polynomials."""

    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly
    d: LaurentPoly

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return LaurentMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> LaurentPoly:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "LaurentMatrix":
        """Invert using the unit determinant (+-t^k for braid images)."""
        sign, exp = self.det().as_unit()
        return LaurentMatrix(
            self.d.shifted(-exp, sign),
            (-self.b).shifted(-exp, sign),
            (-self.c).shifted(-exp, sign),
            self.a.shifted(-exp, sign),
        )

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


_MAT_IDENTITY = LaurentMatrix(_LP_ONE, _LP_ZERO, _LP_ZERO, _LP_ONE)

_GEN_MATS = {
    1: LaurentMatrix(LaurentPoly.monomial(-1, 1), _LP_ONE, _LP_ZERO, _LP_ONE),
    2: LaurentMatrix(_LP_ONE, _LP_ZERO, _LP_T, LaurentPoly.monomial(-1, 1)),
}
_GEN_MATS[-1] = _GEN_MATS[1].inverse()
_GEN_MATS[-2] = _GEN_MATS[2].inverse()

_LETTER_TO_GEN = {"a": 1, "A": -1, "b": 2, "B": -2}
_GEN_TO_LETTER = {v: k for k, v in _LETTER_TO_GEN.items()}


# ---------------------------------------------------------------------------
# braid elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BraidElement:
    """A braid word with its cached matrix image and exponent sum.  Equality
    and hashing go through the matrix, which decides the word problem."""

    word: tuple[int, ...]
    mat: LaurentMatrix

    @classmethod
    def from_word(cls, word: Iterable[int]) -> "BraidElement":
        word = tuple(word)
        mat = _MAT_IDENTITY
        for g in word:
            if g not in _GEN_MATS:
                raise ValueError(f"illegal generator {g}")
            mat = mat @ _GEN_MATS[g]
        return cls(word, mat)

    @classmethod
    def parse(cls, text: str) -> "BraidElement":
        try:
            return cls.from_word(_LETTER_TO_GEN[ch] for ch in text)
        except KeyError as exc:
            raise ValueError(f"illegal braid letter {exc.args[0]!r}") from None

    @classmethod
    def identity(cls) -> "BraidElement":
        return cls((), _MAT_IDENTITY)

    @property
    def eps(self) -> int:
        """Exponent sum: the image under the homomorphism sending every
        generator to 1."""
        return sum(1 if g > 0 else -1 for g in self.word)

    def __mul__(self, other: "BraidElement") -> "BraidElement":
        return BraidElement(self.word + other.word, self.mat @ other.mat)

    def inv(self) -> "BraidElement":
        return BraidElement(tuple(-g for g in reversed(self.word)), self.mat.inverse())

    def __pow__(self, k: int) -> "BraidElement":
        if k < 0:
            return self.inv() ** (-k)
        out = BraidElement.identity()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BraidElement):
            return NotImplemented
        return self.mat == other.mat

    def __hash__(self) -> int:
        return hash(self.mat)

    def render(self) -> str:
        """The word as text, freely reduced for readability only."""
        out: list[int] = []
        for g in self.word:
            if out and out[-1] == -g:
                out.pop()
            else:
                out.append(g)
        return "".join(_GEN_TO_LETTER[g] for g in out)

    def __str__(self) -> str:
        return self.render()


def parse_braid(text: str) -> BraidElement:
    return BraidElement.parse(text)


def render_braid(u: BraidElement) -> str:
    return u.render()


def braid_mul(u: BraidElement, v: BraidElement) -> BraidElement:
    return u * v


def braid_inv(u: BraidElement) -> BraidElement:
    return u.inv()


def braid_eq(u: BraidElement, v: BraidElement) -> bool:
    return u == v


def exponent_sum(u: BraidElement) -> int:
    return u.eps


@functools.lru_cache(maxsize=1)
def meridian() -> BraidElement:
    """The distinguished meridian m = a."""
    return BraidElement.parse("a")


@functools.lru_cache(maxsize=1)
def longitude() -> BraidElement:
    """The longitude of the trefoil, a^-4 b a a b: exponent sum zero and
    commuting with the meridian."""
    return BraidElement.parse("AAAAbaab")


# ---------------------------------------------------------------------------
# Garside-style normal form, independent of the matrix oracle
# ---------------------------------------------------------------------------
#
# Positive braid words over {1, 2} are compared through the closure of the
# single length-preserving rewrite 121 <-> 212, which is exhaustive for the
# short words arising from permutation factors.  An element is written
# delta^d f1 ... fk with delta = 121 and the fi among the nontrivial proper
# divisors of delta, pairwise left-weighted.

_SIMPLES = ("", "1", "2", "12", "21", "121")
_TAU_MAP = str.maketrans("12", "21")


@functools.lru_cache(maxsize=None)
def _positive_class(word: str) -> frozenset:
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for i in range(len(w) - 2):
            seg = w[i : i + 3]
            if seg in ("121", "212"):
                w2 = w[:i] + ("212" if seg == "121" else "121") + w[i + 3 :]
                if w2 not in seen:
                    seen.add(w2)
                    stack.append(w2)
    return frozenset(seen)


def _simple_canon(word: str) -> Union[str, None]:
    for rep in _positive_class(word):
        if rep in _SIMPLES:
            return rep
    return None


@functools.lru_cache(maxsize=None)
def _left_weighted(u: str, v: str) -> tuple[str, str]:
    """Slide generators from the front of v into u while u stays simple."""
    moved = True
    while moved and v:
        moved = False
        for g in "12":
            starter = next((rep for rep in _positive_class(v) if rep.startswith(g)), None)
            if starter is None:
                continue
            grown = _simple_canon(u + g)
            if grown is None:
                continue
            u = grown
            v = _simple_canon(starter[1:])
            moved = True
            break
    return u, v


def _tau(factor: str) -> str:
    return factor.translate(_TAU_MAP)


def garside_normal_form(word: Iterable[int]) -> tuple[int, tuple[str, ...]]:
    """The left normal form (d, factors): the element is delta^d times the
    left-weighted sequence of proper simple factors."""
    d = 0
    factors: list[str] = []
    for g in word:
        if g in (1, 2):
            factors.append(str(g))
        elif g in (-1, -2):
            d -= 1
            factors = [_tau(f) for f in factors]
            factors.append("12" if g == -1 else "21")
        else:
            raise ValueError(f"illegal generator {g}")
    for _ in range(len(factors) + 2):
        changed = False
        for i in range(len(factors) - 1):
            pair = _left_weighted(factors[i], factors[i + 1])
            if pair != (factors[i], factors[i + 1]):
                factors[i], factors[i + 1] = pair
                changed = True
        while factors and factors[0] == "121":
            factors.pop(0)
            d += 1
            changed = True
        while factors and factors[-1] == "":
            factors.pop()
            changed = True
        if not changed:
            return d, tuple(factors)
    raise AssertionError("garside normalization did not stabilize")


def garside_eq(u: BraidElement, v: BraidElement) -> bool:
    """Equality through the Garside normal form; an independent check on the
    matrix oracle for short words."""
    return garside_normal_form(u.word) == garside_normal_form(v.word)
