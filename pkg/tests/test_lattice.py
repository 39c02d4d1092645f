import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgl3.lattice import (
    POSITIVE_ROOTS,
    FacetType,
    PositiveRoot,
    Weight,
    affine_reflect,
    decompose,
    dominantize,
    dual_weight,
    facet_classify,
    fundamental_rep,
    linked,
    pairing,
)

coords = st.integers(-30, 30)
weights = st.builds(Weight, coords, coords)
roots = st.sampled_from(POSITIVE_ROOTS)
ls = st.sampled_from([2, 3, 5, 7])


def test_root_vectors_sum():
    assert PositiveRoot.ALPHA1.vector + PositiveRoot.ALPHA2.vector == PositiveRoot.RHO.vector


def test_pairing_examples():
    assert pairing(Weight(0, 0), PositiveRoot.ALPHA1) == 1
    assert pairing(Weight(3, 3), PositiveRoot.RHO) == 8
    for l in (2, 3, 5):
        assert pairing(Weight(l - 1, l - 1), PositiveRoot.RHO) == 2 * l


@given(weights, roots)
def test_pairing_additive_in_rho(lam, beta):
    total = pairing(lam, PositiveRoot.ALPHA1) + pairing(lam, PositiveRoot.ALPHA2)
    assert pairing(lam, PositiveRoot.RHO) == total


def test_decompose_examples():
    assert decompose(Weight(4, 1), 3) == (Weight(1, 0), Weight(1, 1))
    assert decompose(Weight(3, -3), 3) == (Weight(1, -1), Weight(0, 0))
    assert decompose(Weight(1, 1), 3) == (Weight(0, 0), Weight(1, 1))


@given(weights, ls)
def test_decompose_roundtrip(lam, l):
    cls, res = decompose(lam, l)
    assert l * cls + res == lam
    assert 0 <= res.a <= l - 1 and 0 <= res.b <= l - 1


def test_decompose_signed_box_roundtrip():
    for l in (2, 3):
        for a, b in itertools.product(range(-2 * l, 2 * l + 1), repeat=2):
            cls, res = decompose(Weight(a, b), l)
            assert l * cls + res == Weight(a, b)


def test_affine_reflect_examples():
    assert affine_reflect(Weight(3, 3), PositiveRoot.RHO, 2, 3) == Weight(1, 1)
    assert affine_reflect(Weight(-2, 1), PositiveRoot.ALPHA1, 0, 1) == Weight(0, 0)
    # fixed point on the wall
    lam = Weight(2, 0)
    assert pairing(lam, PositiveRoot.ALPHA1) == 3
    assert affine_reflect(lam, PositiveRoot.ALPHA1, 1, 3) == lam


@given(weights, roots, st.integers(-4, 4), st.integers(1, 7))
def test_affine_reflect_involution(lam, beta, m, step):
    once = affine_reflect(lam, beta, m, step)
    assert affine_reflect(once, beta, m, step) == lam


def test_dominantize_examples():
    assert dominantize(Weight(-1, 5)) == (0, Weight(-1, 5))
    assert dominantize(Weight(2, 3)) == (1, Weight(2, 3))
    assert dominantize(Weight(-2, 1)) == (-1, Weight(0, 0))


@given(weights)
def test_dominantize_sign_zero_iff_singular(lam):
    sign, rep = dominantize(lam)
    if sign == 0:
        assert rep == lam
    else:
        assert rep.is_dominant()
        # regular orbits have six distinct dot images; check both reflections move rep
        assert pairing(rep, PositiveRoot.ALPHA1) > 0
        assert pairing(rep, PositiveRoot.ALPHA2) > 0


def test_facet_classify_examples():
    assert facet_classify(Weight(3, 3), 3) is FacetType.DOWN_ALCOVE
    assert facet_classify(Weight(1, 1), 2) is FacetType.VERTEX
    # (2,1) has restricted first coordinate l-1, so it lies on a right wall;
    # the least up-alcove weight over (r,s)=(0,1) is (1,2) at l=4
    assert facet_classify(Weight(2, 1), 3) is FacetType.RIGHT_WALL
    assert facet_classify(Weight(1, 1), 3) is FacetType.UP_ALCOVE
    assert facet_classify(Weight(1, 2), 4) is FacetType.UP_ALCOVE
    with pytest.raises(ValueError):
        facet_classify(Weight(-1, 0), 3)


def test_facet_classify_total_and_disjoint():
    for l in (2, 3, 5, 7):
        for a, b in itertools.product(range(3 * l), repeat=2):
            lam = Weight(a, b)
            kind = facet_classify(lam, l)
            r, s = decompose(lam, l).restricted
            flags = [
                r == l - 1 and s == l - 1,
                r == l - 1 and s < l - 1,
                s == l - 1 and r < l - 1,
                r + s == l - 2,
                r + s <= l - 3,
                r <= l - 2 and s <= l - 2 and r + s >= l - 1,
            ]
            assert sum(flags) == 1
            order = [
                FacetType.VERTEX,
                FacetType.RIGHT_WALL,
                FacetType.LEFT_WALL,
                FacetType.HORIZONTAL_WALL,
                FacetType.DOWN_ALCOVE,
                FacetType.UP_ALCOVE,
            ]
            assert order[flags.index(True)] is kind


def test_vertex_and_down_alcove_pairing_profiles():
    for l in (2, 3, 5):
        for a, b in itertools.product(range(3 * l), repeat=2):
            lam = Weight(a, b)
            kind = facet_classify(lam, l)
            mods = [pairing(lam, beta) % l for beta in POSITIVE_ROOTS]
            if kind is FacetType.VERTEX:
                assert mods == [0, 0, 0]
            if kind is FacetType.DOWN_ALCOVE:
                assert all(1 <= m <= l - 1 for m in mods)
                assert mods[0] + mods[1] == mods[2] <= l - 1


def test_linked_examples():
    assert linked(Weight(3, 3), Weight(1, 1), 3)
    assert linked(Weight(4, 1), Weight(4, 1), 3)
    assert not linked(Weight(1, 0), Weight(0, 0), 5)


@given(weights, roots, st.integers(-3, 3), ls)
def test_linked_with_reflection(lam, beta, m, l):
    image = affine_reflect(lam, beta, m, l)
    assert linked(lam, image, l)


@given(weights, ls)
@settings(max_examples=50)
def test_fundamental_rep_is_canonical(lam, l):
    rep, moves = fundamental_rep(lam, l)
    assert pairing(rep, PositiveRoot.ALPHA1) >= 0
    assert pairing(rep, PositiveRoot.ALPHA2) >= 0
    assert pairing(rep, PositiveRoot.RHO) <= l
    assert linked(lam, rep, l)


def test_dual_weight():
    assert dual_weight(Weight(1, 0)) == Weight(0, 1)
    assert dual_weight(Weight(2, 2)) == Weight(2, 2)
    assert dual_weight(Weight(4, 1)) == Weight(1, 4)
    assert dual_weight(dual_weight(Weight(5, -3))) == Weight(5, -3)
