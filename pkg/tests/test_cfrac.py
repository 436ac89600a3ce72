from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trefoil import ContinuedFraction, cf_eval, cf_expand, cf_validate


def test_expand_examples():
    assert cf_expand(5).terms == (5,)
    assert cf_expand(Fraction(7, 3)).terms == (2, 3)
    assert cf_expand(Fraction(-1, 2)).terms == (-1, 2)
    assert cf_expand(0).terms == (0,)


def test_eval_examples():
    assert cf_eval(ContinuedFraction((2, 3))) == Fraction(7, 3)
    assert cf_eval(ContinuedFraction((-4,))) == -4
    assert cf_eval(ContinuedFraction((-1, 2))) == Fraction(-1, 2)


def test_validate_examples():
    assert cf_validate([2, 3])
    assert not cf_validate([2, 1])
    assert cf_validate([7])
    assert not cf_validate([0, 0, 2])
    assert not cf_validate([1, -3])
    with pytest.raises(ValueError):
        cf_validate([])


def test_eval_rejects_invalid_lists():
    with pytest.raises(ValueError):
        cf_eval([2, 1])
    with pytest.raises(ValueError):
        cf_eval([2, 0, 2])


def test_constructor_rejects_invalid_terms():
    with pytest.raises(ValueError):
        ContinuedFraction((2, 1))
    with pytest.raises(ValueError):
        ContinuedFraction(())


def test_round_trip_small_grid():
    for k1 in range(-6, 7):
        assert cf_expand(cf_eval(ContinuedFraction((k1,)))).terms == (k1,)
        for kn in range(2, 7):
            cf = ContinuedFraction((k1, kn))
            assert cf_expand(cf_eval(cf)) == cf
            for k2 in range(1, 7):
                cf = ContinuedFraction((k1, k2, kn))
                assert cf_expand(cf_eval(cf)) == cf


def test_round_trip_rationals_exhaustive():
    for q in range(1, 61):
        for p in range(-60, 61):
            if gcd(abs(p), q) == 1:
                r = Fraction(p, q)
                assert cf_eval(cf_expand(r)) == r


@settings(max_examples=300, derandomize=True)
@given(st.fractions(min_value=-10**9, max_value=10**9, max_denominator=10**9))
def test_round_trip_rationals_random(r):
    assert cf_eval(cf_expand(r)) == r


term_lists = st.integers(min_value=-50, max_value=50).flatmap(
    lambda k1: st.lists(st.integers(min_value=1, max_value=30), min_size=0, max_size=7).map(
        lambda middle: (k1, *middle)
    )
).map(lambda terms: terms if len(terms) == 1 or terms[-1] > 1 else terms + (2,))


@settings(max_examples=300, derandomize=True)
@given(term_lists)
def test_round_trip_terms_random(terms):
    cf = ContinuedFraction(terms)
    assert cf_expand(cf_eval(cf)) == cf


def test_expansion_terminates_on_fibonacci_ratios():
    a, b = 1, 1
    for _ in range(40):
        a, b = b, a + b
    # the worst case for the Euclidean descent still meets the step budget
    cf = cf_expand(Fraction(b, a))
    assert cf_eval(cf) == Fraction(b, a)
    assert len(cf) <= 2 * a.bit_length() + 2


def test_parse_and_str():
    assert str(ContinuedFraction((2, 3))) == "[2;3]"
    assert str(ContinuedFraction((-7,))) == "[-7]"
    assert ContinuedFraction.parse("[2;3]") == ContinuedFraction((2, 3))
    assert ContinuedFraction.parse("[ -1 ; 2, 5 ]") == ContinuedFraction((-1, 2, 5))
    assert ContinuedFraction.parse("[4]") == ContinuedFraction((4,))
    with pytest.raises(ValueError):
        ContinuedFraction.parse("2;3")
    with pytest.raises(ValueError):
        ContinuedFraction.parse("[2;]")


def test_json_round_trip():
    cf = ContinuedFraction((-1, 2, 5))
    assert ContinuedFraction.from_json(cf.to_json()) == cf
