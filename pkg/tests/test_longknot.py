import random

import pytest

from trefoil import (
    BraidElement,
    FiberMismatchError,
    braid_eq,
    covering_p,
    fiber_compare,
    lambda_act,
    longitude,
    meridian,
    pi1_act,
    qt_new,
    qt_op,
    qt_op_inv,
)
from trefoil.acceptance import sample_covered_pool
from trefoil.longknot import qt_op_inv_second_slot_forms, qt_op_second_slot_forms


@pytest.fixture(scope="module")
def pool():
    return sample_covered_pool(random.Random(31), 16, 12)


def base_point():
    return qt_new(BraidElement.identity())


def test_qt_new_base_point():
    p = base_point()
    assert braid_eq(covering_p(p), meridian())
    assert p.x.eps == 1


def test_qt_new_rejects_nonzero_exponent_sum():
    with pytest.raises(ValueError):
        qt_new(BraidElement.parse("a"))
    with pytest.raises(ValueError):
        qt_new(BraidElement.parse("ab"))


def test_longitude_slot_gives_fibre_mate():
    p = base_point()
    q = qt_new(longitude())
    assert braid_eq(covering_p(p), covering_p(q))
    assert p != q


def test_idempotence(pool):
    for p in pool:
        assert qt_op(p, p) == p


def test_inverse_round_trips(pool):
    rng = random.Random(32)
    for _ in range(200):
        p, q = rng.choice(pool), rng.choice(pool)
        assert qt_op_inv(qt_op(p, q), q) == p
        assert qt_op(qt_op_inv(p, q), q) == p


def test_quandle_axioms_on_sampled_triples(pool):
    rng = random.Random(33)
    for _ in range(1000):
        p, q, r = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        assert qt_op(qt_op(p, q), r) == qt_op(qt_op(p, r), qt_op(q, r))


def test_both_displayed_second_slot_forms_agree(pool):
    rng = random.Random(34)
    for _ in range(200):
        p, q = rng.choice(pool), rng.choice(pool)
        f1, f2 = qt_op_second_slot_forms(p, q)
        assert braid_eq(f1, f2)
        g1, g2 = qt_op_inv_second_slot_forms(p, q)
        assert braid_eq(g1, g2)


def test_covering_property(pool):
    rng = random.Random(35)
    for _ in range(200):
        anchor, base = rng.choice(pool), rng.choice(pool)
        mate = lambda_act(rng.randint(-2, 2), base)
        assert braid_eq(covering_p(base), covering_p(mate))
        assert qt_op(anchor, base) == qt_op(anchor, mate)


def test_representation_property(pool):
    rng = random.Random(36)
    for _ in range(200):
        p, q = rng.choice(pool), rng.choice(pool)
        lhs = covering_p(qt_op(p, q))
        rhs = covering_p(q).inv() * covering_p(p) * covering_p(q)
        assert braid_eq(lhs, rhs)


def test_covering_image_is_meridian_conjugate(pool):
    for p in pool:
        assert covering_p(p).eps == 1


def test_lambda_act_basics():
    p = base_point()
    assert lambda_act(0, p) == p
    moved = lambda_act(1, p)
    assert moved != p
    assert braid_eq(covering_p(moved), covering_p(p))
    assert lambda_act(-1, moved) == p


def test_lambda_act_freeness(pool):
    rng = random.Random(37)
    for _ in range(50):
        p = rng.choice(pool)
        for k in range(-5, 6):
            assert (lambda_act(k, p) == p) == (k == 0)


def test_pi1_act_basics(pool):
    p = base_point()
    assert pi1_act(p, BraidElement.identity()) == p
    assert pi1_act(p, meridian()) == p
    rng = random.Random(38)
    for _ in range(100):
        q = rng.choice(pool)
        h = BraidElement.from_word(rng.choice((1, -1, 2, -2)) for _ in range(rng.randint(0, 6)))
        acted = pi1_act(q, h)
        assert acted.g.eps == 0
        assert braid_eq(covering_p(acted), h.inv() * covering_p(q) * h)


def test_fiber_compare_recovers_planted_powers(pool):
    rng = random.Random(39)
    for _ in range(50):
        p = rng.choice(pool)
        k = rng.randint(-3, 3)
        assert fiber_compare(p, lambda_act(k, p)) == k


def test_fiber_compare_rejects_different_fibres():
    p = base_point()
    q = pi1_act(p, BraidElement.parse("b"))
    assert not braid_eq(covering_p(p), covering_p(q))
    with pytest.raises(FiberMismatchError):
        fiber_compare(p, q)


def test_connectedness_witness(pool):
    rng = random.Random(40)
    frontier = [base_point()]
    seen = {frontier[0]}
    fibres = {frontier[0].x}
    for _ in range(60):
        current = frontier[rng.randrange(len(frontier))]
        other = rng.choice(pool)
        nxt = qt_op(current, other) if rng.random() < 0.5 else qt_op_inv(current, other)
        if nxt not in seen:
            seen.add(nxt)
            frontier.append(nxt)
            fibres.add(nxt.x)
    assert len(fibres) >= 3
    assert len({el.g for el in seen}) >= 3


def test_json_shape():
    payload = qt_new(longitude()).to_json()
    assert set(payload) == {"g_prime", "x", "eps"}
    assert payload["eps"] == 1
    assert payload["g_prime"] == "AAAAbaab"
