from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from rootpoly.fieldscalar import RatFunc
from rootpoly.laurent import LaurentPoly, symmetrized_monomial


def lp(terms, nvars=2):
    return LaurentPoly(nvars, terms)


exponents = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=6).filter(bool)
polys = st.dictionaries(exponents, coeffs, max_size=4).map(lambda d: lp(d))


def test_construction_drops_zero_terms():
    p = lp({(1, 0): Fraction(0), (0, 1): Fraction(2)})
    assert p.terms == {(0, 1): Fraction(2)}
    with pytest.raises(ValueError):
        LaurentPoly(2, {(1,): Fraction(1)})


def test_immutability():
    p = LaurentPoly.one(2)
    with pytest.raises(AttributeError):
        p.terms = {}


def test_variable_and_monomial():
    x1 = LaurentPoly.variable(2, 1)
    x2inv = LaurentPoly.variable(2, 2, -1)
    assert (x1 * x2inv).terms == {(1, -1): Fraction(1)}
    assert LaurentPoly.monomial(2, (0, 2), Fraction(3)).coefficient((0, 2)) == 3


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPoly.zero(2)


@given(polys)
def test_scalar_coercion(p):
    assert 1 * p == p
    assert p + 0 == p
    assert 2 * p == p + p
    assert 3 - p == -(p - 3)


def test_pow_including_negative_monomial():
    x = LaurentPoly.variable(2, 1)
    assert (x + 1) ** 2 == x * x + 2 * x + 1
    m = LaurentPoly.monomial(2, (1, -1), Fraction(2))
    assert m ** -2 == LaurentPoly.monomial(2, (-2, 2), Fraction(1, 4))
    with pytest.raises(ValueError):
        (x + 1) ** -1


def test_degree_and_leading_part():
    p = lp({(2, 1): Fraction(1), (1, 1): Fraction(5), (0, 3): Fraction(-1)})
    assert p.degree() == 3
    assert p.leading_homogeneous_part() == lp({(2, 1): Fraction(1), (0, 3): Fraction(-1)})
    assert LaurentPoly.zero(2).degree() is None


def test_sorted_terms_is_graded_lex():
    p = lp({(0, 2): 1, (1, 0): 1, (2, 0): 1, (0, 1): 1})
    assert [e for e, _ in p.sorted_terms()] == [(0, 1), (1, 0), (0, 2), (2, 0)]


def test_evaluate_with_negative_exponents():
    p = lp({(1, -1): Fraction(1), (0, 0): Fraction(2)})
    assert p.evaluate((Fraction(1, 2), Fraction(3))) == Fraction(1, 6) + 2
    s = RatFunc.symbol()
    assert p.evaluate((s, s)) == RatFunc.const(3)


def test_substitutions():
    p = lp({(1, 1): Fraction(1)})
    assert p.scale_variables((Fraction(2), Fraction(3))).coefficient((1, 1)) == 6
    assert p.invert_variables().terms == {(-1, -1): Fraction(1)}
    assert p.negate_variables() == p
    x1 = LaurentPoly.variable(2, 1)
    q = lp({(2, 0): 1}).substitute({1: x1 + 1})
    assert q == x1 * x1 + 2 * x1 + 1


@settings(deadline=None, max_examples=30,
          suppress_health_check=[HealthCheck.too_slow])
@given(polys, polys.filter(bool))
def test_exact_div_roundtrip(p, d):
    assert (p * d).exact_div(d) == p


def test_exact_div_detects_remainder():
    x1 = LaurentPoly.variable(2, 1)
    x2 = LaurentPoly.variable(2, 2)
    with pytest.raises(ValueError):
        (x1 * x1 + x2).exact_div(x1 + 1)
    with pytest.raises(ZeroDivisionError):
        x1.exact_div(LaurentPoly.zero(2))


def test_symmetrized_monomial():
    m = symmetrized_monomial((2, 1), 2)
    assert m.terms == {(2, 1): Fraction(1), (1, 2): Fraction(1)}
    m = symmetrized_monomial((1,), 2, signed_group=True)
    assert set(m.terms) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert symmetrized_monomial((), 3) == LaurentPoly.one(3)
