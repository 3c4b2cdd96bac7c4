from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from u3algebra.groebner import buchberger
from u3algebra.mumford import (
    InternalConsistencyError, c_constant, combination_poly, cross_check, f_series, g_series,
    g_series_from_ode, i0_generators, ideal_generators, rising, small_zeta, vandermonde_combination,
    verify_beta_lemmas, verify_index_recursions, zeta_family, zeta_gk,
)
from u3algebra.poly import RING_A, RING_AB, rank_ring

from test_poly import to_sympy


def sympy_zetas(g, k, N, dprime, m_max, dual=False):
    """Independent route: F = B^{g-k-c} C^k exp(-int A/B) expanded by sympy."""
    t = sympy.Symbol("t")
    a = {i: sympy.Symbol(f"a{i}") for i in range(2, N + 1)}
    b = {i: sympy.Symbol(f"b{i}") for i in range(2, N + 1)}
    if dual:
        a = {i: (-1) ** i * v for i, v in a.items()}
        b = {i: (-1) ** i * v for i, v in b.items()}
    c = sympy.Rational(dprime, N) if dual else 1 - sympy.Rational(dprime, N)
    B = 1 + sum(b[i] * t**i for i in b)
    C = 1 + sum((1 - sympy.Rational(i, N)) * b[i] * t**i for i in b)
    A = sum(a[i] * t ** (i - 2) for i in a)
    logG = sympy.integrate(sympy.series(-A / B, t, 0, m_max + 1).removeO(), t)
    F = sympy.exp(logG) * B ** (g - k - c) * C**k
    s = sympy.expand(sympy.series(F, t, 0, m_max + 1).removeO())
    return [sympy.expand(s.coeff(t, m)) for m in range(m_max + 1)]


@pytest.mark.parametrize("g,k,N,dprime,dual", [
    (1, 0, 3, 1, False), (2, 1, 3, 1, False), (2, 2, 3, 2, True), (1, 1, 2, 1, False), (2, 0, 4, 3, False),
])
def test_recursion_matches_sympy_series(g, k, N, dprime, dual):
    m_max = 5
    fam = zeta_family(g, k, m_max, N, dprime, dual)
    ref = sympy_zetas(g, k, N, dprime, m_max, dual)
    for m in range(m_max + 1):
        assert sympy.expand(to_sympy(fam[m]) - ref[m]) == 0


@pytest.mark.parametrize("N", [2, 3, 4])
def test_g_series_two_routes(N):
    assert g_series(N, 7) == g_series_from_ode(N, 7)


@pytest.mark.parametrize("N,dprime", [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)])
def test_cross_check(N, dprime):
    for g in (1, 2):
        for k in range(g + 1):
            for dual in (False, True):
                assert cross_check(g, k, 3 * g + 2, N, dprime, dual) == 3 * g + 3


def test_first_values():
    r = rank_ring(3)
    a2, a3, b2, b3 = r.gens()
    assert zeta_gk(0, 2, 1) == r.const(Fraction(1))
    assert zeta_gk(1, 2, 1) == -a2
    assert zeta_gk(-1, 2, 1) == r.zero()
    # [TRIVIAL] F_{1,0} t^2 coefficient for N = 3, d' = 1: c = 2/3, B^{1/3} G
    assert zeta_gk(2, 1, 0) == a2 * a2 * Fraction(1, 2) - a3 * Fraction(1, 2) + b2 * Fraction(1, 3)


def test_c_constant_and_params():
    assert c_constant(3, 1) == Fraction(2, 3)
    assert c_constant(3, 1, dual=True) == Fraction(1, 3)
    with pytest.raises(ValueError):
        c_constant(3, 3)
    with pytest.raises(ValueError):
        zeta_family(1, -1, 3)


def test_dual_is_sign_twist():
    r = rank_ring(3)
    signs = {"a2": 1, "a3": -1, "b2": 1, "b3": -1}
    F = f_series(2, 1, 3, 1, 6, dual=False)
    Fd = f_series(2, 1, 3, 2, 6, dual=True)
    # dual with d' is the sign twist of the non-dual family with N - d'
    assert all(Fd.coeffs[m] == F.coeffs[m].scale_vars(signs) for m in range(6))
    assert r.names == ("a2", "a3", "b2", "b3")


@pytest.mark.parametrize("g,k", [(1, 0), (1, 1), (2, 0), (2, 2), (3, 1)])
def test_index_recursions(g, k):
    for dual in (False, True):
        rep = verify_index_recursions(g, k, 3, 3 * g + 4, 1, dual)
        assert rep["genus_shift"] and rep["slant_shift"]


def test_index_recursion_negative_control():
    # shifting g by two is not one multiplication by B
    z = zeta_family(1, 0, 4)
    z3 = zeta_family(3, 0, 4)
    r = rank_ring(3)
    b = {0: r.const(Fraction(1)), 2: r.var("b2"), 3: r.var("b3")}
    assert any(z3[m] != sum((bi * z[m - i] for i, bi in b.items()), r.zero()) for m in range(5))


@given(st.integers(0, 12))
def test_small_zeta_closed_form(n):
    s = small_zeta(n)
    assert s.sigma + s.sbar == s.zeta
    assert s.sigma - s.sbar == s.zbar


def test_rising():
    assert rising(3, 0) == 1
    assert rising(3, 3) == 60


@pytest.mark.parametrize("n,i,parity", [(6, 1, "odd"), (6, 2, "odd"), (7, 2, "even"), (9, 3, "even"), (9, 0, "even")])
def test_vandermonde_leading_term(n, i, parity):
    p = combination_poly(n, i, parity)
    if parity == "odd":
        target = (n - 3 * i + 2, 2 * i - 1)
    else:
        target = (n - 3 * i, 2 * i)
    # a higher a3 power is a smaller monomial, so the survivors sit above the target
    assert min(m[1] for m in p.terms) == target[1]
    assert p.lm() == target and p.lc() == 1
    # every monomial has the target's degree
    assert all(RING_A.degree(m) == RING_A.degree(target) for m in p.terms)


def test_vandermonde_bad_index():
    with pytest.raises(ValueError):
        vandermonde_combination(6, 3, "odd")
    with pytest.raises(ValueError):
        vandermonde_combination(6, 1, "mixed")


def test_i0_generators_degrees():
    gens = i0_generators(3)
    assert [p.degree() for p in gens] == [6, 8, 8, 10]


def test_ideal_generators_contain_b2_cubed():
    gens = ideal_generators(2, 2)
    assert RING_AB.var("b2") ** 3 in gens
    assert all(p.ring == RING_AB for p in gens)


@pytest.mark.parametrize("g,k,m", [(1, 1, 1), (1, 1, 3), (2, 1, 2), (2, 2, 4), (3, 2, 5), (3, 3, 3)])
def test_beta_lemmas_hold_for_positive_slant(g, k, m):
    assert verify_beta_lemmas(g, k, m)["all"]


@pytest.mark.parametrize("g,m", [(1, 1), (2, 4), (3, 2)])
def test_beta_square_lemma_fails_at_zero_slant(g, m):
    """At k = 0 the b2^2 membership fails; the b2 membership still holds.

    The failure is confirmed by sympy's Groebner membership test, so it is a
    property of the ideal and not of our Buchberger.
    """
    rep = verify_beta_lemmas(g, 0, m)
    assert rep["b2"] and rep["b2_dual"]
    assert not rep["b2sq"] and not rep["b2sq_dual"]
    z = zeta_family(g, 0, m + 3)
    syms = sympy.symbols(RING_AB.names)
    b2 = syms[2]
    gens = [to_sympy(z[m + j].to_ring(RING_AB)) for j in (1, 2, 3)] + [b2**3]
    G = sympy.groebner(gens, *syms, order="grevlex")
    assert not G.contains(sympy.expand(b2**2 * to_sympy(z[m - 1].to_ring(RING_AB))))


def test_beta_lemma_excluded_index():
    with pytest.raises(ValueError):
        verify_beta_lemmas(1, 1, 2, N=4)


def test_consistency_error_type():
    assert issubclass(InternalConsistencyError, RuntimeError)
    assert buchberger(ideal_generators(1, 4)).contains(RING_AB.var("a2"))
