import pytest
from hypothesis import given, strategies as st

from rank2crystal.algebra import (CartanData, ShapeKind, ShapeWeight, Weight, WeightError,
                                  classify_weight, from_root_coords, letter, orbit_weight,
                                  root_coords, simple_reflection, weyl_word)
from conftest import SHAPES, shapes


def test_cartan_validation():
    with pytest.raises(WeightError):
        CartanData(2, 2)
    with pytest.raises(WeightError):
        CartanData(1, 5)
    c = CartanData(3, 4)
    assert c.alpha(1) == Weight(2, -4) and c.alpha(2) == Weight(-3, 2)
    assert c.entry(1, 2) == -3 and c.entry(2, 1) == -4 and c.entry(1, 1) == 2


def test_p_values_a3():
    s = ShapeWeight.of(3, 3, 1, 1)
    assert [s.p(m) for m in range(-2, 5)] == [5, 2, 1, 1, 2, 5, 13]


def test_c_values_a3():
    c = CartanData(3, 3)
    assert [c.c(j) for j in (1, 2, 3, 4)] == [1, 3, 8, 21]
    assert [c.c(j) for j in (0, -1, -2)] == [1, 3, 8]


def test_classify_examples():
    c = CartanData(3, 3)
    assert classify_weight(c, Weight(1, -1)).kind is ShapeKind.CASE_I
    assert classify_weight(c, Weight(2, -3)).kind is ShapeKind.CASE_II
    with pytest.raises(WeightError, match="case I"):
        classify_weight(c, Weight(2, -1))
    with pytest.raises(WeightError, match="dominant"):
        classify_weight(c, Weight(1, 1))
    with pytest.raises(WeightError, match="antidominant"):
        classify_weight(c, Weight(-1, -2))
    with pytest.raises(WeightError):
        classify_weight(c, Weight(0, -1))
    with pytest.raises(WeightError, match="not of the form"):
        classify_weight(c, Weight(-1, 2))


@pytest.mark.parametrize("a1,a2,k1,k2", SHAPES)
def test_p_recurrence_both_directions(a1, a2, k1, k2):
    s = ShapeWeight.of(a1, a2, k1, k2)
    for l in range(-15, 15):
        mult = a2 if l % 2 == 0 else a1
        assert s.p(l) + s.p(l + 2) == mult * s.p(l + 1)
        assert s.p(l) > 0


@given(shapes, st.integers(-12, 12))
def test_orbit_by_reflections(shape, m):
    # oracle: act on lambda by simple reflections, rightmost letter first
    w = shape.weight
    for i in weyl_word(m):
        w = simple_reflection(shape.cartan, w, i)
    assert w == orbit_weight(shape, m)


@given(shapes, st.integers(-12, 12))
def test_orbit_steps(shape, m):
    c = shape.cartan
    assert orbit_weight(shape, m) == orbit_weight(shape, m - 1) - shape.p(m) * c.alpha(letter(m))
    for i in (1, 2):
        image = simple_reflection(c, orbit_weight(shape, m), i)
        expect = m - 1 if letter(m) == i else m + 1
        assert image == orbit_weight(shape, expect)


@given(shapes, st.integers(-30, 30), st.integers(-30, 30))
def test_root_coords_roundtrip(shape, n1, n2):
    assert root_coords(shape, from_root_coords(shape, n1, n2)) == (n1, n2)


def test_root_coords_rejects_offsets():
    s = ShapeWeight.of(3, 3, 1, 1)
    with pytest.raises(WeightError):
        root_coords(s, Weight(1, 0))
