"""Exact finite continued fractions [k1; k2, ..., kn] and their bijection
with the rationals.

The admissible lists have integer k1, positive k2..kn, and kn > 1 whenever
n >= 2 (integers are just [k1], so the final constraint cannot apply there).
Expansion uses floor, never truncation, so negative rationals expand the way
"greatest integer not exceeding" dictates.  No floating point anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Sequence, Union

Rational = Union[Fraction, int]

_CF_RE = re.compile(r"^\[\s*([+-]?\d+)\s*(?:;(.*))?\]$")


def cf_validate(terms: Sequence[int]) -> bool:
    """True iff the list satisfies the continued-fraction constraints.
    An empty list is an error, not merely invalid."""
    terms = list(terms)
    if not terms:
        raise ValueError("a continued fraction has at least one term")
    if any(not isinstance(k, int) for k in terms):
        return False
    if any(k < 1 for k in terms[1:]):
        return False
    if len(terms) >= 2 and terms[-1] == 1:
        return False
    return True


@dataclass(frozen=True)
class ContinuedFraction:
    """A validated finite continued fraction."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(int(k) for k in self.terms))
        if not cf_validate(self.terms):
            raise ValueError(f"invalid continued fraction terms {list(self.terms)}")

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        head = str(self.terms[0])
        if len(self.terms) == 1:
            return f"[{head}]"
        return f"[{head};{','.join(str(k) for k in self.terms[1:])}]"

    def to_json(self) -> dict:
        return {"terms": list(self.terms)}

    @classmethod
    def from_json(cls, data: dict) -> "ContinuedFraction":
        return cls(tuple(data["terms"]))

    @classmethod
    def parse(cls, text: str) -> "ContinuedFraction":
        m = _CF_RE.match(text.strip())
        if not m:
            raise ValueError(f"not a continued fraction: {text!r}")
        terms = [int(m.group(1))]
        if m.group(2) is not None:
            tail = m.group(2).strip()
            if not tail:
                raise ValueError(f"empty tail in {text!r}")
            terms.extend(int(part.strip()) for part in tail.split(","))
        return cls(tuple(terms))


def cf_expand(r: Rational) -> ContinuedFraction:
    """Expand a rational by the floor algorithm: k = floor(r), recurse on the
    reciprocal of the remainder until it vanishes.

    The step count is Euclidean, at most 2*bit_length(denominator) + 2.
    """
    r = Fraction(r)
    budget = 2 * r.denominator.bit_length() + 2
    terms: list[int] = []
    steps = 0
    while True:
        k = floor(r)
        terms.append(k)
        steps += 1
        assert steps <= budget, "continued-fraction expansion exceeded Euclidean bound"
        delta = r - k
        if delta == 0:
            break
        r = 1 / delta
    return ContinuedFraction(tuple(terms))


def cf_eval(cf: Union[ContinuedFraction, Sequence[int]]) -> Fraction:
    """Evaluate k1 + 1/(k2 + 1/(... + 1/kn)) exactly.  Raw term lists are
    validated first; invalid lists (e.g. a trailing 1 with n >= 2) are
    errors."""
    if not isinstance(cf, ContinuedFraction):
        if not cf_validate(cf):
            raise ValueError(f"invalid continued fraction terms {list(cf)}")
        cf = ContinuedFraction(tuple(cf))
    value = Fraction(cf.terms[-1])
    for k in reversed(cf.terms[:-1]):
        value = k + 1 / value
    return value
