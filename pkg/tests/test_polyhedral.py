import itertools

import pytest
from hypothesis import given, strategies as st

from rank2crystal import polyhedral as P
from rank2crystal.algebra import CartanData, ShapeWeight, Weight, simple_reflection, weyl_word
from rank2crystal.crystalgraph import tensor_ball

C3 = CartanData(3, 3)
LAM = Weight(1, -1)


def z():
    return P.zero_element(C3, LAM)


def test_sigma_on_zero():
    y = z()
    assert all(P.sigma_k(y, k) == 0 for k in range(1, 10))
    assert P.sigma_k(y, 0) == 1
    assert P.sigma_k(y, -1) == -1
    assert P.sigma_k(y, -40) == P.sigma_k(y, -2)
    assert (P.crystal_eps(y, 1), P.crystal_phi(y, 1)) == (0, 1)
    assert (P.crystal_eps(y, 2), P.crystal_phi(y, 2)) == (1, 0)
    assert P.crystal_wt(y) == LAM


def test_operator_examples():
    y = z()
    assert P.lowering(y, 1) == P.TensorElement.make(C3, LAM, {1: 1})
    assert P.lowering(y, 2) is None
    assert P.raising(y, 2) == P.TensorElement.make(C3, LAM, minus={0: -1})
    assert P.raising(y, 1) is None


def test_membership_examples():
    assert P.membership_plus(C3, {})
    assert P.membership_plus(C3, {1: 1, 2: 2})
    assert P.membership_plus(C3, {1: 1, 2: 3, 3: 1})
    assert not P.membership_plus(C3, {3: 1})
    assert not P.membership_plus(C3, {1: -1})
    assert P.membership_minus(C3, {0: -1, -1: -2})
    assert not P.membership_minus(C3, {-2: -1})


def _compositions(total, slots):
    for parts in itertools.product(range(total + 1), repeat=slots):
        if sum(parts) <= total:
            yield parts


@pytest.mark.parametrize("a1,a2", [(3, 3), (3, 4), (5, 2)])
def test_membership_matches_reachable_set(a1, a2):
    # oracle: every sequence reachable from 0 in <= D steps, versus the inequalities
    c, D = CartanData(a1, a2), 5
    reach_plus, frontier = {()}, [{}]
    reach_minus, frontier_m = {()}, [{}]
    for _ in range(D):
        nxt, nxt_m = [], []
        for y in frontier:
            for i in (1, 2):
                ny = P.plus_f(c, y, i)
                key = P._freeze(ny)
                if key not in reach_plus:
                    reach_plus.add(key)
                    nxt.append(ny)
        for y in frontier_m:
            for i in (1, 2):
                ny = P.minus_e(c, y, i)
                key = P._freeze(ny)
                if key not in reach_minus:
                    reach_minus.add(key)
                    nxt_m.append(ny)
        frontier, frontier_m = nxt, nxt_m
    # a chain started at position 2 can reach D + 1
    assert all(max((k for k, _ in key), default=0) <= D + 1 for key in reach_plus)
    assert all(min((k for k, _ in key), default=0) >= -D for key in reach_minus)
    plus = {P._freeze({k + 1: v for k, v in enumerate(parts)})
            for parts in _compositions(D, D + 1) if P.membership_plus(c, {k + 1: v for k, v in enumerate(parts) if v})}
    minus = {P._freeze({-k: -v for k, v in enumerate(parts)})
             for parts in _compositions(D, D + 1) if P.membership_minus(c, {-k: -v for k, v in enumerate(parts) if v})}
    assert plus == reach_plus
    assert minus == reach_minus


def _single_steps(y, i, count, raising):
    for _ in range(count):
        y = (P.raising if raising else P.lowering)(y, i)
        if y is None:
            return None
    return y


shape_st = st.sampled_from([(3, 3, 1, 1), (3, 4, 1, 1), (4, 3, 1, 2), (3, 3, 3, 2)])


@given(shape_st, st.integers(0, 60), st.sampled_from((1, 2)), st.integers(1, 12), st.booleans())
def test_bulk_matches_single_steps(shape, pick, i, count, raising):
    sh = ShapeWeight.of(*shape)
    ball = tensor_ball(sh, 4)
    y = ball[pick % len(ball)]
    bulk = (P.raising if raising else P.lowering)(y, i, count)
    assert bulk == _single_steps(y, i, count, raising)


def test_star_and_weyl_examples():
    y = z()
    assert P.star(y) == P.zero_element(C3, -LAM)
    s1 = P.reflect(y, 1)
    assert P.crystal_wt(s1) == Weight(-1, 2)
    with pytest.raises(P.CrystalError):
        P.star(P.TensorElement.make(C3, LAM, {3: 1}))


@pytest.mark.parametrize("m", range(-10, 11))
def test_weyl_action_weight(m):
    sh = ShapeWeight.of(3, 3, 1, 1)
    y = P.zero_element(C3, LAM)
    out = P.weyl_action(y, list(reversed(weyl_word(m))))
    assert P.crystal_wt(out) == sh.orbit(m)
    w = LAM
    for i in weyl_word(m):
        w = simple_reflection(C3, w, i)
    assert P.crystal_wt(out) == w


def test_extremality():
    assert P.is_extremal_truncated(z(), 6)
    f1 = P.lowering(z(), 1)
    assert P.is_in_crystal_basis(f1, 6)
    mixed = P.TensorElement.make(C3, LAM, {1: 1}, {0: -1})
    assert not P.is_in_crystal_basis(mixed, 8)


def test_star_involution_on_ball():
    for y in tensor_ball(ShapeWeight.of(3, 4, 1, 1), 6):
        s = P.star(y)
        assert P.crystal_wt(s) == -y.mu
        assert P.star(s) == y


def test_encode():
    y = P.TensorElement.make(C3, LAM, {1: 1, 2: 2}, {0: -1})
    assert y.encode() == "{1:1,2:2}|t(1,-1)|{0:-1}"
