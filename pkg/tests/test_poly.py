from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from u3algebra.field import SQRT3, CycNum
from u3algebra.poly import (
    RING_A, RING_AB, Poly, Ring, TruncSeries, monomial_compare, mono_lcm, mono_text,
    poly_arithmetic, power_sums, rank_ring, series_compose,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exps3 = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(exps3, small, max_size=5).map(lambda d: Poly(RING_AB, d))


def to_sympy(p: Poly):
    syms = sympy.symbols(p.ring.names)
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod(s**e for s, e in zip(syms, m))
                            for m, c in p.terms.items()))


def test_rank_ring_weights():
    r = rank_ring(4)
    assert r.names == ("a2", "a3", "a4", "b2", "b3", "b4")
    assert r.weights == (2, 4, 6, 4, 6, 8)
    assert RING_AB.weights == (2, 4, 4)


def test_weighted_revlex_examples():
    # degree first, then the smaller last exponent wins
    m = RING_AB.monomial
    assert monomial_compare(m(a3=2), m(a2=1, b2=1), RING_AB) == 1
    assert monomial_compare(m(a2=2), m(a3=1), RING_AB) == 1
    assert monomial_compare(m(a3=1), m(b2=1), RING_AB) == 1
    assert monomial_compare(m(a2=1), m(a2=1), RING_AB) == 0


@given(exps3, exps3, exps3)
def test_order_is_multiplicative(a, b, c):
    ab = [x + y for x, y in zip(a, c)]
    bc = [x + y for x, y in zip(b, c)]
    assert monomial_compare(tuple(ab), tuple(bc), RING_AB) == monomial_compare(a, b, RING_AB)


@given(polys, polys, polys)
def test_arithmetic_matches_sympy(p, q, r):
    assert to_sympy(p * q + r) == sympy.expand(to_sympy(p) * to_sympy(q) + to_sympy(r))
    assert to_sympy(p - q) == sympy.expand(to_sympy(p) - to_sympy(q))


@given(polys)
def test_json_and_text_are_canonical(p):
    assert Poly.from_json(RING_AB, p.to_json()) == p
    assert Poly(RING_AB, dict(reversed(list(p.terms.items())))).text() == p.text()


@given(polys, polys)
def test_derivative_is_a_derivation(p, q):
    for n in RING_AB.names:
        assert (p * q).derivative(n) == p.derivative(n) * q + p * q.derivative(n)


def test_leading_term_and_text():
    a2, a3, b2 = RING_AB.gens()
    p = a2 * b2 + a3 * a3 * 2 - 1
    assert p.lm() == RING_AB.monomial(a3=2)
    assert p.lc() == 2
    assert p.degree() == 8
    assert not p.is_homogeneous()
    assert mono_text(RING_AB.monomial(a2=2, b2=1), RING_AB) == "a2^2*b2"
    assert mono_lcm((1, 0, 2), (0, 3, 1)) == (1, 3, 2)


def test_to_ring_drops_absent_variables():
    r3 = rank_ring(3)
    p = r3.var("a2") * r3.var("b3") + r3.var("a3")
    assert p.to_ring(RING_AB) == RING_AB.var("a3")


def test_scale_vars_and_evaluate():
    a2, a3 = RING_A.gens()
    p = a2 * a2 * a3 + 3
    assert p.scale_vars({"a2": -1, "a3": 2}) == a2 * a2 * a3 * 2 + 3
    assert p.evaluate({"a2": Fraction(2), "a3": Fraction(-1)}, Fraction(1)) == -1
    assert p.evaluate({"a2": SQRT3, "a3": CycNum.rational(1)}, CycNum.rational(1)) == 6


def test_ring_mismatch_and_ops():
    with pytest.raises(ValueError):
        RING_A.var("a2") + RING_AB.var("a2")
    with pytest.raises(ValueError):
        poly_arithmetic(RING_A.var("a2"), RING_A.var("a2"), "div")
    with pytest.raises(ValueError):
        Ring(("x", "x"), (1, 1))


# [DERIVED] power sums against elementary symmetric functions of explicit roots
@pytest.mark.parametrize("roots", [(1, 2, -3), (Fraction(1, 2), -2, Fraction(3, 2)), (5, -1, -4)])
def test_power_sums_match_roots(roots):
    x = [Fraction(r) for r in roots]
    e2 = x[0] * x[1] + x[0] * x[2] + x[1] * x[2]
    e3 = x[0] * x[1] * x[2]
    p = power_sums(3, 7)
    assert p[0] == rank_ring(3).const(Fraction(3))
    for n in range(1, 8):
        val = p[n].evaluate({"a2": 0, "a3": 0, "b2": e2, "b3": e3}, Fraction(1))
        assert val == sum(r**n for r in x)


def series(coeffs, order=6):
    return TruncSeries([Fraction(c) for c in coeffs], order)


@given(st.lists(small, min_size=1, max_size=6))
def test_exp_log_inverse(cs):
    s = series([0] + cs)
    assert s.exp().log() == s
    u = series([1] + cs)
    assert u.log().exp() == u
    assert u * u.reciprocal() == series([1])


@given(st.lists(small, min_size=1, max_size=6))
def test_pow_rational(cs):
    u = series([1] + cs)
    h = u.pow_rational(Fraction(1, 2))
    assert h * h == u
    assert u.pow_rational(3) == u * u * u


def test_exp_matches_sympy():
    t = sympy.Symbol("t")
    s = series([0, 1, Fraction(1, 2), -2], 7).exp()
    ref = sympy.series(sympy.exp(t + t**2 / 2 - 2 * t**3), t, 0, 7).removeO()
    assert [sympy.Rational(c.numerator, c.denominator) for c in s.coeffs] == [ref.coeff(t, n) for n in range(7)]


def test_series_errors():
    with pytest.raises(ValueError):
        series([0, 1]).reciprocal()
    with pytest.raises(ValueError):
        series([2, 1]).log()
    with pytest.raises(ValueError):
        series_compose(series([1]), "sin")


def test_derivative_integrate():
    s = series([3, 1, 4, 1, 5], 5)
    assert s.derivative().integrate().truncate(5) == series([0, 1, 4, 1, 5], 5)
