from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rootpoly.errors import NonGenericParameterError
from rootpoly.laurent import LaurentPoly
from rootpoly.qseries import (
    factorial_ratio_tail,
    hypergeometric_terminating,
    poch_ratio_tail,
    q_pochhammer,
    q_pochhammer_multi,
    shifted_factorial,
    shifted_factorial_multi,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=8)


def test_q_pochhammer_values():
    q = Fraction(1, 2)
    assert q_pochhammer(Fraction(1, 3), q, 0) == 1
    assert q_pochhammer(Fraction(1, 3), q, 2) == Fraction(2, 3) * Fraction(5, 6)
    assert q_pochhammer(Fraction(1), q, 1) == 0
    with pytest.raises(ValueError):
        q_pochhammer(q, q, -1)


def test_q_pochhammer_on_laurent_arguments():
    q = Fraction(1, 2)
    x = LaurentPoly.variable(1, 1)
    p = q_pochhammer(x, q, 2)  # (1 - x)(1 - x/2)
    assert p == (1 - x) * (1 - q * x)


def test_shifted_factorial():
    assert shifted_factorial(Fraction(3), 4) == 3 * 4 * 5 * 6
    assert shifted_factorial(Fraction(-2), 3) == 0
    assert shifted_factorial_multi([Fraction(1), Fraction(2)], 2) == 2 * 6


@given(rationals, st.integers(0, 5), st.integers(0, 5))
def test_poch_ratio_tail_matches_quotient(a, m, k):
    if k > m:
        m, k = k, m
    q = Fraction(1, 3)
    denom = q_pochhammer(a, q, k)
    if denom:
        assert poch_ratio_tail(a, q, m, k) * denom == q_pochhammer(a, q, m)


@given(rationals, st.integers(0, 5), st.integers(0, 5))
def test_factorial_ratio_tail_matches_quotient(a, m, k):
    if k > m:
        m, k = k, m
    denom = shifted_factorial(a, k)
    if denom:
        assert factorial_ratio_tail(a, m, k) * denom == shifted_factorial(a, m)


def test_chu_vandermonde():
    # 2F1(-n, b; c; 1) = (c - b)_n / (c)_n
    n, b, c = 3, Fraction(2, 7), Fraction(9, 5)
    lhs = hypergeometric_terminating("rFs", [-n, b], [c], 1, 1, n)
    assert lhs == shifted_factorial(c - b, n) / shifted_factorial(c, n)


def test_q_chu_vandermonde():
    # 2phi1(q^-n, b; c; q, c q^n / b) = (c/b; q)_n / (c; q)_n
    q, b, c, n = Fraction(1, 2), Fraction(2, 3), Fraction(3, 5), 3
    lhs = hypergeometric_terminating(
        "rphis", [q ** -n, b], [c], q, c * q ** n / b, n)
    assert lhs == q_pochhammer(c / b, q, n) / q_pochhammer(c, q, n)


def test_q_binomial_theorem_terminating():
    # 1phi0(q^-n; -; q, z) = (z q^-n; q)_n, exercising the compensating factor
    q, n = Fraction(1, 3), 4
    z = LaurentPoly.variable(1, 1)
    lhs = hypergeometric_terminating("rphis", [q ** -n], [], q, z, n)
    assert lhs == q_pochhammer(z * q ** -n, q, n)


def test_exponential_series_0f0():
    # 0F0 truncated at a terminating numerator is just the partial sum
    val = hypergeometric_terminating("rFs", [-2], [], 1, Fraction(1, 2), 2)
    assert val == 1 - 2 * Fraction(1, 2) + Fraction(2 * 1, 2) * Fraction(1, 4) / 1


def test_denominator_parameter_must_be_generic():
    q = Fraction(1, 2)
    with pytest.raises(NonGenericParameterError):
        hypergeometric_terminating("rphis", [q ** -2], [Fraction(1)], q, 1, 2)
    with pytest.raises(NonGenericParameterError):
        hypergeometric_terminating("rFs", [-2, 1], [Fraction(-1)], 1, 1, 2)


def test_denominator_parameter_must_be_scalar():
    x = LaurentPoly.variable(1, 1)
    with pytest.raises(ValueError):
        hypergeometric_terminating("rphis", [1], [x], Fraction(1, 2), 1, 1)


def test_multi_pochhammer():
    q = Fraction(1, 2)
    aa = [Fraction(1, 3), Fraction(1, 5)]
    assert q_pochhammer_multi(aa, q, 3) == q_pochhammer(aa[0], q, 3) * q_pochhammer(aa[1], q, 3)
