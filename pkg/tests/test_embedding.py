from hypothesis import given, strategies as st

from rank2crystal import lspath, polyhedral as P
from rank2crystal.algebra import ShapeWeight
from rank2crystal.embedding import (image_report, sigma_cross_check, theta, theta_entry,
                                    verify_morphism)
from rank2crystal.lspath import LSPath
from conftest import paths


def test_theta_examples(lam3):
    c, lam = lam3.cartan, lam3.weight
    assert theta(lspath.straight_line(lam3)) == P.zero_element(c, lam)
    assert theta(LSPath(lam3, 1, 1)) == P.TensorElement.make(c, lam, {1: 1})
    assert theta(LSPath(lam3, -1, -1)) == P.TensorElement.make(c, lam, minus={0: -1})
    assert theta(LSPath(lam3, 2, 1, (1,))) == P.TensorElement.make(c, lam, {1: 1, 2: 1})
    # n = m >= 1 fills p_n, ..., p_1; n = m <= -1 fills -p_0, ..., -p_{n+1}
    assert theta(LSPath(lam3, 3, 3)).plus == {1: 1, 2: 2, 3: 5}
    assert theta(LSPath(lam3, -3, -3)).minus == {0: -1, -1: -2, -2: -5}
    # n < m <= -1: q_k - p_k on the turning positions
    b = LSPath(lam3, -1, -2, (1,))
    assert theta(b).minus == {0: -1, -1: -1}
    assert theta_entry(b, -2) == 0


def test_theta_mixed_signs():
    s = ShapeWeight.of(3, 3, 3, 2)  # p_0 = 2, p_1 = 3
    b = LSPath(s, 1, -1, (1, 1))
    y = theta(b)
    assert y.plus == {1: 1} and y.minus == {0: -1}
    assert verify_morphism(b, 1).ok and verify_morphism(b, 2).ok


def test_morphism_examples(lam3):
    pl = lspath.straight_line(lam3)
    r1, r2 = verify_morphism(pl, 1), verify_morphism(pl, 2)
    assert r1.ok and r2.ok
    assert theta(lspath.lowering(pl, 1)) == P.lowering(theta(pl), 1)
    assert lspath.lowering(pl, 2) is None and P.lowering(theta(pl), 2) is None


def test_sigma_examples(lam3):
    b = LSPath(lam3, 2, 1, (1,))
    y = theta(b)
    assert P.sigma_k(y, 2) == 1
    assert P.sigma_k(y, 1) == -2
    assert sigma_cross_check(b).ok
    assert sigma_cross_check(lspath.straight_line(lam3)).ok


def _bad_theta(path):
    y = theta(path)
    return P.TensorElement.make(y.cartan, y.mu, {k: v + 1 for k, v in y.plus.items()}, y.minus)


def test_harness_catches_corruption(lam3):
    b = LSPath(lam3, 2, 1, (1,))
    assert not verify_morphism(b, 1, _bad_theta).ok
    assert not sigma_cross_check(b, _bad_theta).ok


@given(paths(), st.sampled_from((1, 2)))
def test_morphism_random(b, i):
    rep = verify_morphism(b, i)
    assert rep.ok, rep.first_failure()


@given(paths())
def test_sigma_table_random(b):
    rep = sigma_cross_check(b)
    assert rep.ok, rep.first_failure()


@given(paths())
def test_image_random(b):
    rep = image_report(b, depth=6)
    assert rep.ok, rep.first_failure()
