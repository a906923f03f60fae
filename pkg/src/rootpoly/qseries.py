"""Pochhammer symbols and terminating (q-)hypergeometric sums.

Arguments may be exact scalars or LaurentPoly values: everything is
assembled from ring operations only.  Denominator parameters must stay
scalar so each term divides exactly; a vanishing denominator factor is
reported by name.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonGenericParameterError
from .fieldscalar import format_scalar, scalar_inverse
from .laurent import LaurentPoly


def q_pochhammer(a, q, k: int):
    """(a; q)_k = (1-a)(1-aq)...(1-aq^(k-1)) for k >= 0."""
    if k < 0:
        raise ValueError("q_pochhammer needs k >= 0")
    acc = 1
    aq = a
    for _ in range(k):
        acc = acc * (1 - aq)
        aq = aq * q
    return acc if k else Fraction(1) * acc


def q_pochhammer_multi(aa, q, k: int):
    """(a_1, ..., a_r; q)_k, the product of single Pochhammers."""
    acc = Fraction(1)
    for a in aa:
        acc = acc * q_pochhammer(a, q, k)
    return acc


def shifted_factorial(a, k: int):
    """(a)_k = a(a+1)...(a+k-1) for k >= 0."""
    if k < 0:
        raise ValueError("shifted_factorial needs k >= 0")
    acc = Fraction(1)
    for i in range(k):
        acc = acc * (a + i)
    return acc


def shifted_factorial_multi(aa, k: int):
    acc = Fraction(1)
    for a in aa:
        acc = acc * shifted_factorial(a, k)
    return acc


def _name(x) -> str:
    if isinstance(x, LaurentPoly):
        return repr(x)
    return format_scalar(x)


def _den_pochhammer_inverse_q(b, q, k: int):
    """1/(b;q)_k for scalar b, naming the vanishing factor on failure."""
    acc = Fraction(1)
    bq = b
    for j in range(k):
        factor = 1 - bq
        if not factor:
            raise NonGenericParameterError(f"1 - ({_name(b)})*q^{j}")
        acc = acc * scalar_inverse(factor, f"1 - ({_name(b)})*q^{j}")
        bq = bq * q
    return acc


def _den_factorial_inverse(b, k: int):
    """1/(b)_k for scalar b, naming the vanishing factor on failure."""
    acc = Fraction(1)
    for j in range(k):
        factor = b + j
        if not factor:
            raise NonGenericParameterError(f"({_name(b)}) + {j}")
        acc = acc * scalar_inverse(factor, f"({_name(b)}) + {j}")
    return acc


def hypergeometric_terminating(kind: str, numerator_params, denominator_params,
                               base_or_unit, argument, n: int):
    """Terminating rFs (kind="rFs") or r-phi-s (kind="rphis") sum of n+1 terms.

    For the q-case the k-th term carries the standard compensating factor
    ((-1)^k q^(k(k-1)/2))^(1+s-r).  The first numerator parameter is
    expected to make the series terminate at index n (q^(-n), resp. -n);
    terms are summed for k = 0..n regardless.  Numerator parameters and
    the argument may be Laurent polynomials; denominator parameters must
    be scalars.
    """
    if n < 0:
        raise ValueError("series length n must be >= 0")
    for b in denominator_params:
        if isinstance(b, LaurentPoly):
            raise ValueError("denominator parameters must be scalar")

    total = None
    r, s_count = len(numerator_params), len(denominator_params)
    zpow = 1
    for k in range(n + 1):
        term = zpow
        for a in numerator_params:
            term = q_pochhammer(a, base_or_unit, k) * term if kind == "rphis" \
                else shifted_factorial(a, k) * term
        if kind == "rphis":
            q = base_or_unit
            for b in denominator_params:
                term = term * _den_pochhammer_inverse_q(b, q, k)
            term = term * _den_pochhammer_inverse_q(q, q, k)
            exp = 1 + s_count - r
            if exp:
                sign = Fraction(-1) ** (k * exp)
                term = term * sign * q ** ((k * (k - 1) // 2) * exp)
        elif kind == "rFs":
            for b in denominator_params:
                term = term * _den_factorial_inverse(b, k)
            term = term * _den_factorial_inverse(Fraction(1), k)
        else:
            raise ValueError(f"unknown kind {kind!r}")
        total = term if total is None else total + term
        zpow = zpow * argument
    return total


def poch_ratio_tail(a, q, m: int, k: int):
    """(a;q)_m / (a;q)_k = (a q^k; q)_(m-k), valid for 0 <= k <= m.

    Stays in the ring even when ``a`` is a Laurent monomial.
    """
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    return q_pochhammer(a * q ** k, q, m - k)


def factorial_ratio_tail(a, m: int, k: int):
    """(a)_m / (a)_k = (a + k)_(m-k), valid for 0 <= k <= m."""
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    return shifted_factorial(a + k, m - k)
