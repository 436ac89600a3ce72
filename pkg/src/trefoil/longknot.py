"""The covering quandle of the long trefoil: pairs (x, g') with g' in the
commutator subgroup of B3 and x = m^{g'} the corresponding meridian
conjugate.

g' is the source of truth; x is derived from it on demand, so the defining
constraint can never drift, and equality needs only the second slot.  The
quandle operations are

    (x, g') *  (y, h') = (y^-1 x y, g' x^-1 y)
    (x, g') *̄ (y, h') = (y x y^-1, m g' h'^-1 m^-1 h')

where *̄ uses the self-consistent displayed form; both operations also have
an alternative displayed form, exposed for the agreement tests.  The
infinite cyclic group generated by the longitude acts on second slots,
freely and transitively on each fibre of the covering map (x, g') -> x.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .braid import BraidElement, braid_eq, longitude, meridian


class FiberMismatchError(ValueError):
    """The two elements lie over different meridian conjugates."""


class FiberSearchExceededError(RuntimeError):
    """The deck-transformation search bound was exhausted without a match;
    the comparison is inconclusive, never silently wrong."""


@dataclass(frozen=True, eq=False)
class CoveredElement:
    """A point of the long-trefoil quandle: the exponent-zero slot g' plus
    its meridian conjugate x = g'^-1 m g', derived and cached on first use."""

    g: BraidElement

    @cached_property
    def x(self) -> BraidElement:
        x = self.g.inv() * meridian() * self.g
        assert x.eps == 1
        return x

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoveredElement):
            return NotImplemented
        # g' determines x, so one matrix comparison decides equality
        return braid_eq(self.g, other.g)

    def __hash__(self) -> int:
        return hash(self.g)

    def to_json(self) -> dict:
        return {"g_prime": self.g.render(), "x": self.x.render(), "eps": self.x.eps}

    def __str__(self) -> str:
        return f"({self.x.render() or '1'}, {self.g.render() or '1'})"


def qt_new(g: BraidElement) -> CoveredElement:
    """Build the covered element over g', which must have exponent sum zero."""
    if g.eps != 0:
        raise ValueError(f"second slot must have exponent sum 0, got {g.eps}")
    return CoveredElement(g)


def qt_op(p: CoveredElement, q: CoveredElement) -> CoveredElement:
    """(x, g') * (y, h') = (x^y, g' x^-1 y)."""
    return qt_new(p.g * p.x.inv() * q.x)


def qt_op_inv(p: CoveredElement, q: CoveredElement) -> CoveredElement:
    """(x, g') *̄ (y, h') = (x^(y^-1), m g' h'^-1 m^-1 h')."""
    m = meridian()
    return qt_new(m * p.g * q.g.inv() * m.inv() * q.g)


def qt_op_second_slot_forms(p: CoveredElement, q: CoveredElement) -> tuple[BraidElement, BraidElement]:
    """Both displayed forms of the * second slot: g' x^-1 y and
    m^-1 g' h'^-1 m h'.  They must agree on valid covered elements."""
    m = meridian()
    form1 = p.g * p.x.inv() * q.x
    form2 = m.inv() * p.g * q.g.inv() * m * q.g
    return form1, form2


def qt_op_inv_second_slot_forms(p: CoveredElement, q: CoveredElement) -> tuple[BraidElement, BraidElement]:
    """Both displayed forms of the *̄ second slot: g' x y^-1 and
    m g' h'^-1 m^-1 h'."""
    m = meridian()
    form1 = p.g * p.x * q.x.inv()
    form2 = m * p.g * q.g.inv() * m.inv() * q.g
    return form1, form2


def covering_p(p: CoveredElement) -> BraidElement:
    """The covering map onto the conjugacy class of the meridian."""
    return p.x


def lambda_act(k: int, p: CoveredElement) -> CoveredElement:
    """The deck transformation: multiply the second slot by lambda^k on the
    left.  The covering image is unchanged."""
    return qt_new(longitude() ** k * p.g)


def pi1_act(p: CoveredElement, h: BraidElement) -> CoveredElement:
    """The group action (m^{g'}, g')^h = (m^{g'h}, m^{-eps(h)} g' h)."""
    m = meridian()
    return qt_new(m ** (-h.eps) * p.g * h)


def fiber_compare(p1: CoveredElement, p2: CoveredElement) -> int:
    """The unique k with g'_2 = lambda^k g'_1, for two elements of the same
    fibre, found by bounded search (|k| up to the word length of
    g'_2 g'_1^-1 plus one)."""
    if not braid_eq(covering_p(p1), covering_p(p2)):
        raise FiberMismatchError("elements lie in different fibres")
    lam = longitude()
    diff = p2.g * p1.g.inv()
    bound = len(diff.word) + 1
    candidate = p1.g
    cand_neg = p1.g
    if braid_eq(candidate, p2.g):
        return 0
    for k in range(1, bound + 1):
        candidate = lam * candidate
        if braid_eq(candidate, p2.g):
            return k
        cand_neg = lam.inv() * cand_neg
        if braid_eq(cand_neg, p2.g):
            return -k
    raise FiberSearchExceededError(
        f"no power of the longitude within |k| <= {bound} matches"
    )
