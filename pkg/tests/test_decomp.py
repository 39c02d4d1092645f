import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgl3.charring import chi_l, e, frobenius_twist, restricted_simple_char, weyl_char
from qgl3.decomp import (
    DecompResult,
    chi_decomposition,
    chi_l_expansion,
    hat_simple_char,
    nabla_l_char,
    zhat_char,
    zhat_factors,
)
from qgl3.lattice import Weight, dominance_key


def test_worked_instance_down_alcove():
    dec = chi_decomposition(Weight(3, 3), 3)
    assert dec.case_id == "v"
    assert list(dec.factors) == [
        Weight(3, 3), Weight(4, 1), Weight(3, -3), Weight(1, 4), Weight(-3, 3),
        Weight(3, 0), Weight(0, 0), Weight(0, 3), Weight(1, 1),
    ]
    dims = [chi_l(f, 3).dimension for f in dec.factors]
    assert dims == [8, 21, 0, 21, 0, 3, 1, 3, 7]
    assert sum(dims) == 64
    assert dec.character() == weyl_char(Weight(3, 3))


def test_vertex_case():
    for l in (2, 3, 5):
        lam = l * Weight(2, 1) + Weight(l - 1, l - 1)
        dec = chi_decomposition(lam, l)
        assert dec.case_id == "i"
        assert list(dec.factors) == [lam]
        # twisted tensor factorization at the vertex
        assert weyl_char(lam) == frobenius_twist(weyl_char(Weight(2, 1)), l) * (
            restricted_simple_char(Weight(l - 1, l - 1), l)
        )


def test_up_alcove_case_count():
    dec = chi_decomposition(Weight(1, 1), 3)
    assert dec.case_id == "vi"
    assert len(dec.factors) == 9
    assert dec.factors[3] == Weight(1, 1)
    assert dec.character() == weyl_char(Weight(1, 1))
    # least up-alcove weight over (r,s) = (0,1)
    dec = chi_decomposition(Weight(1, 2), 4)
    assert dec.case_id == "vi" and len(dec.factors) == 9
    assert dec.character() == weyl_char(Weight(1, 2))


def test_factor_counts_by_case():
    for l in (2, 3, 5):
        for cls in (Weight(2, 2), Weight(3, 1)):
            for r, s in itertools.product(range(l), repeat=2):
                dec = chi_decomposition(l * cls + Weight(r, s), l)
                want = {"i": 1, "ii": 4, "iii": 4, "iv": 4, "v": 9, "vi": 9}[dec.case_id]
                assert len(dec.factors) == want


def test_main_identity_sweep_small():
    for l in (2, 3, 5):
        for a, b in itertools.product(range(2), repeat=2):
            for r, s in itertools.product(range(l), repeat=2):
                lam = l * Weight(a, b) + Weight(r, s)
                assert chi_decomposition(lam, l).character() == weyl_char(lam)


def test_boundary_cancellation():
    # On the dominant edge a pair of alcove terms cancels exactly: the third
    # against the eighth for classical part (a,0), and by duality the fifth
    # against the sixth for (0,a).
    for l in (3, 5):
        for a in (1, 2, 3):
            lam = l * Weight(a, 0)
            dec = chi_decomposition(lam, l)
            assert not chi_l(dec.factors[2], l) + chi_l(dec.factors[7], l)
            assert chi_l(dec.factors[2], l)
            lam = l * Weight(0, a)
            dec = chi_decomposition(lam, l)
            assert not chi_l(dec.factors[4], l) + chi_l(dec.factors[5], l)
            if a >= 2:
                assert chi_l(dec.factors[4], l)


def test_surviving_factors_match_expansion():
    for l in (2, 3, 5):
        for a, b in itertools.product(range(3), repeat=2):
            for r, s in itertools.product(range(l), repeat=2):
                lam = l * Weight(a, b) + Weight(r, s)
                expansion = chi_l_expansion(weyl_char(lam), l)
                assert all(c == 1 for _, c in expansion)
                assert sorted(w for w, _ in expansion) == sorted(
                    chi_decomposition(lam, l).surviving_factors()
                )


def test_zhat_factors_examples():
    for l in (2, 3, 5):
        lam = l * Weight(1, -2) + Weight(l - 1, l - 1)
        assert zhat_factors(lam, l) == [lam]
    factors = zhat_factors(Weight(1, 0), 2)
    dims = [hat_simple_char(f, 2).dimension for f in factors]
    assert dims == [3, 1, 1, 3]
    assert len(zhat_factors(Weight(3, 3), 3)) == 9
    assert len(zhat_factors(Weight(1, 1), 3)) == 9


def test_zhat_identity_sweep():
    for l in (2, 3):
        for a, b in itertools.product(range(-2, 3), repeat=2):
            for r, s in itertools.product(range(l), repeat=2):
                lam = l * Weight(a, b) + Weight(r, s)
                total = None
                for nu in zhat_factors(lam, l):
                    h = hat_simple_char(nu, l)
                    total = h if total is None else total + h
                zc = zhat_char(lam, l)
                assert total == zc
                assert zc.dimension == l**3


def test_zhat_char_shape():
    zc = zhat_char(Weight(0, 0), 2)
    assert zc.dimension == 8
    assert zc[Weight(0, 0)] == 1
    # lowest weight is lam minus (l-1) times the sum of the positive roots
    low = Weight(-2, -2)
    assert zc[low] == 1
    assert min(zc.coeffs, key=dominance_key) == low


@given(
    st.builds(Weight, st.integers(-3, 3), st.integers(-3, 3)),
    st.builds(Weight, st.integers(-2, 2), st.integers(-2, 2)),
    st.sampled_from([2, 3, 5]),
)
@settings(max_examples=40)
def test_zhat_char_shift_rule(lam, nu, l):
    assert zhat_char(lam + l * nu, l) == zhat_char(lam, l) * e(*(l * nu))


def test_nabla_l_char():
    assert nabla_l_char(Weight(4, 1), 3).dimension == 21
    assert nabla_l_char(Weight(1, 1), 3) == restricted_simple_char(Weight(1, 1), 3)
    with pytest.raises(ValueError):
        nabla_l_char(Weight(3, -3), 3)


def test_decomp_json_roundtrip():
    dec = chi_decomposition(Weight(3, 3), 3)
    back = DecompResult.from_json(dec.to_json())
    assert back == dec
    import json

    data = json.loads(dec.to_json())
    assert data["case"] == "v"
    assert data["nonzero"] == [True, True, False, True, False, True, True, True, True]


def test_non_dominant_rejected():
    with pytest.raises(ValueError):
        chi_decomposition(Weight(-1, 3), 3)
