import pytest
from hypothesis import given, strategies as st

from u3algebra.field import SQRT3, SQRTM3, ZERO, ZETA3, CycNum
from u3algebra.poly import rank_ring
from u3algebra.spectrum import (
    DeformedModule, annihilation_check, c_lattice, deformed_module, eigen_tuple, eigenvalue_set,
    evaction, root_of_unity, simple_type_census,
)


def test_c_lattice_small():
    assert c_lattice(1) == {(0, 0)}
    assert c_lattice(2) == {(0, 0), (1, 1), (1, -1), (-1, 1), (-1, -1), (2, 0), (-2, 0), (0, 2), (0, -2)}
    with pytest.raises(ValueError):
        c_lattice(0)


@given(st.integers(1, 12))
def test_lattice_size(g):
    assert len(c_lattice(g)) == (2 * g - 1) ** 2


def test_eigen_tuple_g1():
    E = eigenvalue_set(1, 1)
    assert len(E) == 3
    assert eigen_tuple(0, 0, 0).values == (ZERO, ZERO, CycNum.rational(3), ZERO)
    assert eigen_tuple(1, 2, 0)[0] == SQRT3 * ZETA3 * 2
    assert eigen_tuple(2, 0, 1)[1] == SQRTM3 * ZETA3
    with pytest.raises(ValueError):
        eigenvalue_set(1, 3)


@pytest.mark.parametrize("g", [1, 2, 3, 5])
def test_root_action_preserves_set(g):
    E = eigenvalue_set(g, 2)
    for r in range(6):
        assert {evaction(l, 3, r) for l in E} == E


def test_root_action_negative_control():
    # a twelfth root of unity does not preserve the set
    E = eigenvalue_set(2, 1)
    w = root_of_unity(12, 1)
    moved = {type(l)(tuple(v * w for v in l.values)) for l in E}
    assert moved != E


def test_root_of_unity_domain():
    assert root_of_unity(3, 1) == ZETA3
    with pytest.raises(ValueError):
        root_of_unity(5, 1)
    with pytest.raises(ValueError):
        evaction(eigen_tuple(0, 0, 0), 4, 1)


@pytest.mark.parametrize("k,a,b", [(0, 0, 0), (1, 1, -1), (2, -2, 0), (1, 0, 2)])
def test_deformed_module_limit(k, a, b):
    M = deformed_module(k, a, b)
    ring = rank_ring(3)
    vals = tuple(M.evaluate(ring.var(n), 2).coeffs[0].coeffs[0] for n in ring.names)
    assert vals == M.limit().values
    assert M.epsilon(1) == ZETA3 ** ((b + k) % 3)


def test_deformed_module_bad_k():
    with pytest.raises(ValueError):
        DeformedModule(3, 0, 0)


@pytest.mark.parametrize("a,b", [(0, 0), (1, 1), (-2, 0)])
def test_annihilation(a, b):
    assert annihilation_check(a, b, 5)


def test_census_g2_is_tight():
    r = simple_type_census(2, window=4)
    assert r.standard_monomial_count == 9 and r.match and r.message == "ok"
    assert r.eigen_count == 27
    assert r.windows_tried[0] == 4


def test_census_small_window_escalates():
    r = simple_type_census(2, window=0)
    assert r.windows_tried[0] == 0 and len(r.windows_tried) >= 2
    assert r.standard_monomial_count == 9
