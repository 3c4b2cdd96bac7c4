import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from u3algebra.acceptance import exp_basis_factor, random_alexander, random_spec
from u3algebra.field import I, ONE, ZERO, CycNum
from u3algebra.invariants import (
    BLOWUP_PATTERN, AlexPoly, DonaldsonSpec, FinAbGroup, adjunction_check, alexander_u3, blowup_factor,
    blowup_spec, conjugation_symmetry, elliptic_coefficients, elliptic_report, framed_euler_char,
    groups_up_to, k3_spec, marino_moore_coefficients, series2_equal, structure_series, verify_blowup,
)
from u3algebra.poly import coeff2


def test_spec_validation():
    with pytest.raises(ValueError):
        DonaldsonSpec(((1,),), ((0,),), {(0, 0): ONE}, (0,)).validate()  # K not characteristic
    with pytest.raises(ValueError):
        DonaldsonSpec(((0, 1), (2, 0)), ((0, 0),), {}, (0, 0)).validate()
    with pytest.raises(ValueError):
        DonaldsonSpec(((0,),), ((0,),), {(0, 0): I}, (0,)).validate()
    k3_spec().validate()


def test_spec_json_round_trip():
    spec = random_spec(random.Random(3))
    again = DonaldsonSpec.from_json(spec.to_json())
    assert again.to_json() == spec.to_json()


def test_k3_structure_series_low_terms():
    # Q(G) = 2 g1 g2 with G = (1, 2): exp(2 t2^2 - 4 t3^2), K = 0
    s = structure_series(k3_spec(), [1, 2], [1, 2], 4)
    assert coeff2(s, 0, 0) == ONE
    assert coeff2(s, 2, 0) == CycNum.rational(2)
    assert coeff2(s, 0, 2) == CycNum.rational(-4)
    assert coeff2(s, 1, 0) == ZERO


@pytest.mark.parametrize("seed", range(4))
def test_conjugation_symmetry_random(seed):
    spec = random_spec(random.Random(seed))
    assert conjugation_symmetry(spec, [1] * spec.b, [2] * spec.b, 5)


@pytest.mark.parametrize("shift", ["plain", "through_E"])
def test_blowup_k3(shift):
    assert verify_blowup(k3_spec(), 6, shift)["passed"]


@pytest.mark.parametrize("shift", ["plain", "through_E"])
def test_blowup_factor_equals_exponential_pattern(shift):
    assert series2_equal(blowup_factor(shift, 6), exp_basis_factor(6, shift))


def test_blowup_wrong_pattern_fails(monkeypatch):
    # swapping 1/6 and 1/3 must break the identity
    swapped = {k: Fraction(1, 2) - v for k, v in BLOWUP_PATTERN.items()}
    monkeypatch.setattr("u3algebra.invariants.BLOWUP_PATTERN", swapped)
    spec = random_spec(random.Random(11))
    assert not verify_blowup(spec, 6, "plain")["passed"]


def test_blowup_wrong_shift_fails():
    assert not series2_equal(blowup_factor("plain", 6), blowup_factor("through_E", 6))
    with pytest.raises(ValueError):
        blowup_factor("sideways", 4)


def test_blowup_spec_shape():
    big = blowup_spec(k3_spec(), "through_E")
    assert big.b == 3 and big.w == (1, 0, 1) and len(big.K) == 2
    big.validate()


def test_adjunction():
    assert adjunction_check(0, 1, 0)
    assert not adjunction_check(2, 1, 0)
    with pytest.raises(ValueError):
        adjunction_check(0, 1, -1)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
@pytest.mark.parametrize("wf", [0, 1, 2])
def test_elliptic_methods_agree(g, wf):
    r = elliptic_report(g, wf)
    assert r["methods_agree"] and r["support_ok"] and r["parity_ok"]


def test_elliptic_top_coefficient():
    # the expansion gives (1/3)^{g-1}; the stated value (2/3)^{g-1} agrees only at g = 1
    for g in range(1, 6):
        r = elliptic_report(g, 0)
        assert r["d_top_expanded"] == CycNum.rational(Fraction(1, 3) ** (g - 1))
        assert r["d_top_agree"] == (g == 1)


def test_elliptic_g2_by_hand():
    # (1/3)(e^x + e^-x) - (1/3)(e^y + e^-y) at wf = 0
    d = elliptic_coefficients(2, 0)
    third = CycNum.rational(Fraction(1, 3))
    assert d == {(-1, 0): third, (0, -1): -third, (0, 1): -third, (1, 0): third}


def test_elliptic_bad_method():
    with pytest.raises(ValueError):
        elliptic_coefficients(2, 0, "fft")


@pytest.mark.parametrize("orders,N", [((), 3), ((2,), 3), ((3,), 2), ((2, 2), 3), ((4,), 4), ((2, 3), 3)])
def test_framed_euler(orders, N):
    H = FinAbGroup(orders)
    assert framed_euler_char(H, N, "orbit_formula") == framed_euler_char(H, N) == H.order ** (N - 1)


def test_groups_enumeration():
    gs = groups_up_to(8, 3)
    assert FinAbGroup((2, 2, 2)) in gs and FinAbGroup((8,)) in gs
    assert all(g.order <= 8 for g in gs)
    with pytest.raises(ValueError):
        framed_euler_char(FinAbGroup((2,)), 1)


def test_alexander_trefoil():
    d = AlexPoly.from_list([1, -1, 1])
    prod = alexander_u3(d)
    assert prod == alexander_u3(d, "coefficient_rule")
    assert prod[(0, 0)] == 1 and prod[(1, 1)] == -1 and prod[(2, 0)] == 1


@given(st.integers(0, 10_000))
def test_alexander_random(seed):
    d = random_alexander(random.Random(seed))
    assert alexander_u3(d) == alexander_u3(d, "coefficient_rule")


def test_alexander_validation():
    with pytest.raises(ValueError):
        AlexPoly({1: 1, 0: 1})
    with pytest.raises(ValueError):
        AlexPoly.from_list([1, 1, 1])
    with pytest.raises(ValueError):
        AlexPoly.from_list([1, 1])


def test_marino_moore_flagged():
    out = marino_moore_coefficients({0: 1, 1: -1})
    assert out["conjectural"] and out["c"][(0, 1)] == -9
