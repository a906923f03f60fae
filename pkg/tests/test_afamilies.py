from fractions import Fraction
from itertools import permutations

import pytest

from rootpoly.afamilies import (
    ATypeParams,
    INTERP_JACK,
    INTERP_MACDONALD,
    JACK,
    MACDONALD,
    a_type_evaluation,
    a_type_polynomial,
    generalized_binomial,
    interpolation_node_value,
    spectral_point_a,
    tableau_weight,
)
from rootpoly.partitions import (
    contains,
    enumerate_partitions,
    enumerate_reverse_tableaux,
    special_tableau,
)

Q0, T0 = Fraction(1, 2), Fraction(1, 3)
QP2 = ATypeParams.q_case(2, Q0, T0)
QP3 = ATypeParams.q_case(3, Q0, T0)


def is_symmetric(p):
    n = p.nvars
    for perm in permutations(range(n)):
        for exps, c in p.terms.items():
            if p.coefficient(tuple(exps[i] for i in perm)) != c:
                return False
    return True


def test_macdonald_frozen_expansion():
    p = a_type_polynomial(MACDONALD, (2, 1), QP3)
    # monomial orbit of (2,1) plus 38/17 times the (1,1,1) monomial
    assert p.coefficient((2, 1, 0)) == 1
    assert p.coefficient((0, 1, 2)) == 1
    assert p.coefficient((1, 1, 1)) == Fraction(38, 17)
    assert len(p.terms) == 7


def test_jack_frozen_expansion():
    p = a_type_polynomial(JACK, (2, 1), ATypeParams.one_case(3, Fraction(5, 3)))
    assert p.coefficient((2, 1, 0)) == 1
    assert p.coefficient((1, 1, 1)) == Fraction(30, 13)
    assert len(p.terms) == 7


def test_polynomials_are_symmetric_and_monic():
    for lam in enumerate_partitions(4, 2):
        p = a_type_polynomial(MACDONALD, lam, QP2)
        assert is_symmetric(p)
        full = tuple(lam) + (0,) * (2 - len(lam))
        assert p.coefficient(full) == 1
        j = a_type_polynomial(JACK, lam, ATypeParams.one_case(2, 2))
        assert is_symmetric(j)
        assert j.coefficient(full) == 1


def test_principal_evaluations_match_polynomials():
    t_point = (T0, Fraction(1))
    ones = (Fraction(1), Fraction(1))
    for lam in enumerate_partitions(4, 2):
        p = a_type_polynomial(MACDONALD, lam, QP2)
        assert p.evaluate(t_point) == a_type_evaluation(MACDONALD, lam, QP2)
        jp = ATypeParams.one_case(2, 2)
        j = a_type_polynomial(JACK, lam, jp)
        assert j.evaluate(ones) == a_type_evaluation(JACK, lam, jp)


def test_macdonald_principal_frozen():
    assert a_type_evaluation(MACDONALD, (2, 1), QP2) == Fraction(4, 9)


def test_interpolation_vanishing_small():
    lam = (2,)
    p = a_type_polynomial(INTERP_MACDONALD, lam, QP2)
    for mu in enumerate_partitions(3, 2):
        if not contains(lam, mu):
            assert p.evaluate(spectral_point_a(mu, QP2)) == 0
    assert p.evaluate(spectral_point_a(lam, QP2)) == Fraction(1, 48)


def test_interp_jack_node_value_frozen():
    assert interpolation_node_value((2, 1), ATypeParams.one_case(2, 2)) == 4


def test_interp_top_degree_is_classical():
    for lam in enumerate_partitions(3, 2):
        ip = a_type_polynomial(INTERP_MACDONALD, lam, QP2)
        assert ip.leading_homogeneous_part() == a_type_polynomial(MACDONALD, lam, QP2)
        one = ATypeParams.one_case(2, 2)
        ipj = a_type_polynomial(INTERP_JACK, lam, one)
        assert ipj.leading_homogeneous_part() == a_type_polynomial(JACK, lam, one)


def test_generalized_binomial_frozen():
    assert generalized_binomial((2, 1), (), QP2) == 1
    assert generalized_binomial((2, 1), (2, 1), QP2) == 1
    assert generalized_binomial((2, 1), (1,), QP2) == Fraction(9, 2)
    assert generalized_binomial((2, 1), (1,), ATypeParams.one_case(2, 2)) == 3


def test_special_tableau_weight_is_one():
    for lam in enumerate_partitions(4, 3):
        T = special_tableau(lam, 3)
        assert tableau_weight(T, QP3) == 1
        assert tableau_weight(T, ATypeParams.one_case(3, Fraction(5, 3))) == 1


def test_tableau_weights_sum_check():
    # for a single row the weights reproduce the monomial coefficients of P_m
    lam = (2,)
    p = a_type_polynomial(MACDONALD, lam, QP2)
    total = sum(
        tableau_weight(T, QP2) for T in enumerate_reverse_tableaux(lam, 2)
    )
    assert total == p.evaluate((Fraction(1), Fraction(1)))


def test_family_mode_mismatch():
    with pytest.raises(ValueError):
        a_type_polynomial(MACDONALD, (1,), ATypeParams.one_case(2, 2))
    with pytest.raises(ValueError):
        a_type_polynomial(JACK, (1,), QP2)
    with pytest.raises(ValueError):
        a_type_polynomial(MACDONALD, (1, 1, 1), QP2)
