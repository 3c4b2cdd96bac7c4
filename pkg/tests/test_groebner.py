import itertools

import pytest
import sympy
from hypothesis import given, strategies as st

from u3algebra.groebner import (
    GroebnerDegreeCap, MonomialIdeal, buchberger, i0_target, lattice_count, lt_contains, lt_gen_ideal,
    reduce, s_polynomial, standard_monomials,
)
from u3algebra.mumford import i0_generators, ideal_generators
from u3algebra.poly import RING_A, RING_AB, Poly

from test_poly import to_sympy


def sympy_dimension(polys) -> int:
    """Quotient dimension from sympy's own grevlex basis (order independent)."""
    ring = polys[0].ring
    syms = sympy.symbols(ring.names)
    G = sympy.groebner([to_sympy(p) for p in polys], *syms, order="grevlex")
    lms = [sympy.Poly(g, *syms).monoms(order="grevlex")[0] for g in G.exprs]
    bound = max(max(m) for m in lms) + 1
    return sum(1 for e in itertools.product(range(bound), repeat=len(syms))
               if not any(all(x >= y for x, y in zip(e, m)) for m in lms))


def test_small_basis_by_hand():
    a2, a3 = RING_A.gens()
    gb = buchberger([a2 * a2 - a3, a2 * a3])
    # a2^3 = a2 a3 = 0 and a3^2 = a2^2 a3 = 0 in the quotient
    assert gb.contains(a3 * a3)
    assert gb.contains(a2**3)
    assert not gb.contains(a2 * a2)
    assert standard_monomials(gb).count == 3


def test_reduce_leaves_no_divisible_terms():
    a2, a3 = RING_A.gens()
    basis = [a2 * a2 - a3]
    r = reduce(a2**5 + a3, basis)
    assert all(m[0] < 2 for m in r.terms)


def test_s_polynomial_cancels_leading_terms():
    a2, a3, b2 = RING_AB.gens()
    f, g = a3 * a3 + a2 * b2, a3 * b2 - a2
    s = s_polynomial(f, g)
    lcm = (0, 2, 1)
    assert lcm not in s.terms


@pytest.mark.parametrize("n", [2, 3, 4])
def test_i0_dimension_matches_sympy(n):
    gens = i0_generators(n)
    assert standard_monomials(buchberger(gens)).count == sympy_dimension(gens) == lattice_count(2 * n)


# [DERIVED] membership against sympy's independent Groebner implementation
@pytest.mark.parametrize("g", [1, 2])
def test_membership_matches_sympy(g):
    gens = ideal_generators(g, 3)
    gb = buchberger(gens)
    syms = sympy.symbols(RING_AB.names)
    G = sympy.groebner([to_sympy(p) for p in gens], *syms, order="grevlex")
    a2, a3, b2 = RING_AB.gens()
    probes = [a2 ** (2 * g), a3 ** g * a2, b2 * b2 * a2 ** (2 * g - 2), a2 * b2 + a3, b2**3 + a2]
    for p in probes:
        assert gb.contains(p) == G.contains(to_sympy(p))


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.fractions(-3, 3, max_denominator=3)),
                min_size=1, max_size=4))
def test_generators_reduce_to_zero(terms):
    a2, a3 = RING_A.gens()
    extra = Poly(RING_A, {(i, j): c for i, j, c in terms})
    gens = i0_generators(2) + ([extra] if extra else [])
    gb = buchberger(gens)
    for p in gens:
        assert gb.contains(p)
    # reduced basis: no LM divides another LM
    lms = [b.lm() for b in gb.basis]
    assert len(set(lms)) == len(lms)


def test_degree_cap():
    with pytest.raises(GroebnerDegreeCap):
        buchberger(ideal_generators(3, 4), degree_cap=4)


def test_monomial_ideal_minimalizes():
    I = MonomialIdeal(RING_A, [(2, 0), (3, 1), (0, 2), (1, 2)])
    assert sorted(I.gens) == [(0, 2), (2, 0)]
    assert I.contains((5, 0)) and not I.contains((1, 1))


def test_lattice_count_small_values():
    # [TRIVIAL] by enumeration: pairs (i, j) with 2i + 3j < n
    assert [lattice_count(n) for n in range(0, 9)] == [0, 1, 1, 2, 3, 4, 5, 7, 8]
    assert lattice_count(-3) == 0
    with pytest.raises(ValueError):
        lattice_count(4, "fast")


@given(st.integers(-5, 300))
def test_lattice_closed_form(n):
    assert lattice_count(n) == lattice_count(n, "brute_force")


@given(st.integers(1, 40))
def test_lattice_sum_identity(g):
    assert sum(lattice_count(4 * g - s) for s in (2, 4, 6)) == (2 * g - 1) ** 2


def test_lt_gen_ideal_g2():
    # a3^2 has degree 8 and leads the degree-8 part; a2 b2 has degree 6
    gb = buchberger(ideal_generators(2, 4))
    rep = lt_contains(gb, lt_gen_ideal(2, RING_AB))
    assert all(rep.values())
    assert RING_AB.monomial(b2=3) in rep


def test_i0_target_is_lt_ideal():
    for n in range(2, 6):
        gb = buchberger(i0_generators(n))
        target = i0_target(n, RING_A)
        assert sorted(gb.lt_ideal.gens) == sorted(target.gens)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_lt_gen_is_the_whole_lt_ideal(g):
    gb = buchberger(ideal_generators(g, 5))
    assert sorted(gb.lt_ideal.gens) == sorted(lt_gen_ideal(g, RING_AB).gens)
