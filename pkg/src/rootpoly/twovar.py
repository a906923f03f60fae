"""Closed-form two-variable and one-variable oracles.

Everything here is assembled directly from explicit single or double
sums, independently of the general-n tableau machinery, and is used to
cross-validate it.  Ratios of Pochhammer symbols with Laurent-monomial
arguments are rewritten as tail products so no division of polynomials
ever happens; the half-power substitutions behind the ultraspherical
forms are realized by pairing terms, never by fractional exponents.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import NonGenericParameterError
from .fieldscalar import scalar_inverse, scalar_pow
from .laurent import LaurentPoly
from .qseries import (
    factorial_ratio_tail,
    hypergeometric_terminating,
    poch_ratio_tail,
    q_pochhammer,
    q_pochhammer_multi,
    shifted_factorial,
    shifted_factorial_multi,
)

TWO_VAR_IDS = (
    "ip_bc_mac_87",
    "ip_bc_mac_88",
    "ip_mac_89",
    "mac_90_92",
    "ip_jack_2",
    "bc_ip_jack_2",
    "jack_96",
    "koorn_93_95",
    "jacobi_97_100",
)


def _x(i: int, power: int = 1) -> LaurentPoly:
    return LaurentPoly.variable(2, i, power)


def _scalar_den(value, name: str):
    return scalar_inverse(value, name)


# ---------------------------------------------------------------------------
# ultraspherical polynomials in z = e^(i theta)
# ---------------------------------------------------------------------------

def ultraspherical(kind: str, m: int, q=None, t=None, tau=None) -> LaurentPoly:
    """C_m as a symmetric Laurent polynomial in one variable z."""
    if m < 0:
        raise ValueError("degree must be >= 0")
    terms = {}
    for j in range(m + 1):
        if kind == "q_case":
            num = q_pochhammer(t, q, j) * q_pochhammer(t, q, m - j)
            den = q_pochhammer(q, q, j) * q_pochhammer(q, q, m - j)
            c = num * _scalar_den(den, f"(q;q)_{j} (q;q)_{m - j}")
        elif kind == "one_case":
            c = shifted_factorial(tau, j) * shifted_factorial(tau, m - j)
            c = c * Fraction(1, 1) / (Fraction(1) * _fact(j) * _fact(m - j))
        else:
            raise ValueError(f"unknown kind {kind!r}")
        e = (m - 2 * j,)
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly(1, terms)


def _fact(k: int) -> int:
    acc = 1
    for i in range(2, k + 1):
        acc *= i
    return acc


def _from_ultraspherical(c_poly: LaurentPoly, m1: int, m2: int) -> LaurentPoly:
    """Map z^(m1-m2-2j) terms to x1^(m1-j) x2^(m2+j)."""
    terms = {}
    for (e,), c in c_poly.terms.items():
        j, rem = divmod(m1 - m2 - e, 2)
        if rem:
            raise ValueError("ultraspherical parity mismatch")
        terms[(m1 - j, m2 + j)] = c
    return LaurentPoly(2, terms)


# ---------------------------------------------------------------------------
# Macdonald and Jack polynomials for n = 2
# ---------------------------------------------------------------------------

def mac_n2_phi_form(m1: int, m2: int, q, t) -> LaurentPoly:
    """Monomial prefactor times a terminating 2-phi-1 in q x2/(t x1)."""
    z = _x(1, -1) * _x(2) * q * scalar_inverse(t, "t")
    phi = hypergeometric_terminating(
        "rphis",
        [scalar_pow(q, -(m1 - m2)), t],
        [q * scalar_pow(q, -(m1 - m2)) * scalar_inverse(t, "t")],
        q,
        z,
        m1 - m2,
    )
    return _x(1, m1) * _x(2, m2) * phi


def mac_n2_sum_form(m1: int, m2: int, q, t) -> LaurentPoly:
    """The explicit single sum with paired Pochhammer coefficients."""
    m = m1 - m2
    pref = q_pochhammer(q, q, m) * _scalar_den(q_pochhammer(t, q, m), f"(t;q)_{m}")
    total = LaurentPoly.zero(2)
    for j in range(m + 1):
        num = q_pochhammer(t, q, j) * q_pochhammer(t, q, m - j)
        den = q_pochhammer(q, q, j) * q_pochhammer(q, q, m - j)
        c = pref * num * _scalar_den(den, f"(q;q)_{j} (q;q)_{m - j}")
        total = total + LaurentPoly.monomial(2, (m1 - j, m2 + j), c)
    return total


def mac_n2_ultraspherical_form(m1: int, m2: int, q, t) -> LaurentPoly:
    """Assembly through the q-ultraspherical polynomial."""
    m = m1 - m2
    pref = q_pochhammer(q, q, m) * _scalar_den(q_pochhammer(t, q, m), f"(t;q)_{m}")
    return pref * _from_ultraspherical(ultraspherical("q_case", m, q=q, t=t), m1, m2)


def jack_n2_phi_form(m1: int, m2: int, tau) -> LaurentPoly:
    z = _x(1, -1) * _x(2)
    phi = hypergeometric_terminating(
        "rFs", [-(m1 - m2), tau], [1 - (m1 - m2) - tau], None, z, m1 - m2
    )
    return _x(1, m1) * _x(2, m2) * phi


def jack_n2_ultraspherical_form(m1: int, m2: int, tau) -> LaurentPoly:
    m = m1 - m2
    pref = _fact(m) * _scalar_den(shifted_factorial(tau, m), f"(tau)_{m}")
    return pref * _from_ultraspherical(ultraspherical("one_case", m, tau=tau), m1, m2)


# ---------------------------------------------------------------------------
# interpolation families for n = 2
# ---------------------------------------------------------------------------

def ip_bc_mac_n2_row(m: int, q, t, a) -> LaurentPoly:
    """BC interpolation Macdonald polynomial for a one-row shape (m, 0)."""
    pref = scalar_pow(q, -(m * (m - 1)) // 2) * scalar_pow(
        -Fraction(1) * t * a, -m
    )
    total = LaurentPoly.zero(2)
    for k in range(m + 1):
        c = q_pochhammer_multi([scalar_pow(q, -m), t], q, k) * scalar_pow(q, k)
        den = q_pochhammer(q * scalar_pow(q, -m) * scalar_inverse(t, "t"), q, k)
        c = c * _scalar_den(den, f"(q^(1-m)/t; q)_{k}")
        c = c * _scalar_den(q_pochhammer(q, q, k), f"(q;q)_{k}")
        term = LaurentPoly.constant(2, c * pref)
        term = term * q_pochhammer(_x(2) * a, q, k) * q_pochhammer(_x(2, -1) * a, q, k)
        qk = scalar_pow(q, k)
        term = term * q_pochhammer(_x(1) * (qk * t * a), q, m - k)
        term = term * q_pochhammer(_x(1, -1) * (qk * t * a), q, m - k)
        total = total + term
    return total


def ip_bc_mac_n2(m1: int, m2: int, q, t, a) -> LaurentPoly:
    """General two-row shape via the explicit reduction prefactor."""
    if not m1 >= m2 >= 0:
        raise ValueError("need m1 >= m2 >= 0")
    pref = LaurentPoly.constant(
        2, scalar_pow(a, -2 * m2) * scalar_pow(q, -m2 * (m2 - 1))
    )
    for i in (1, 2):
        pref = pref * q_pochhammer(_x(i) * a, q, m2) * q_pochhammer(_x(i, -1) * a, q, m2)
    return pref * ip_bc_mac_n2_row(m1 - m2, q, t, scalar_pow(q, m2) * a)


def ip_mac_n2_preinversion(m1: int, m2: int, q, t) -> LaurentPoly:
    """Interpolation Macdonald polynomial, sum in powers of q x2/(t x1)."""
    t_inv = scalar_inverse(t, "t")
    pref = _x(1, m1) * _x(2, m2)
    pref = pref * q_pochhammer(_x(1, -1), q, m2) * q_pochhammer(_x(2, -1), q, m2)
    total = LaurentPoly.zero(2)
    m = m1 - m2
    for k in range(m + 1):
        c = q_pochhammer_multi([scalar_pow(q, -m), t], q, k)
        den = q_pochhammer(q * scalar_pow(q, -m) * t_inv, q, k)
        c = c * _scalar_den(den, f"(q^(1-m)/t; q)_{k}")
        c = c * _scalar_den(q_pochhammer(q, q, k), f"(q;q)_{k}")
        term = LaurentPoly.constant(2, c)
        term = term * q_pochhammer(_x(2, -1) * scalar_pow(q, m2), q, k)
        term = term * q_pochhammer(_x(1, -1) * (scalar_pow(q, m2 + k) * t), q, m - k)
        term = term * (_x(1, -1) * _x(2) * (q * t_inv)) ** k
        total = total + term
    return pref * total


def ip_mac_n2(m1: int, m2: int, q, t) -> LaurentPoly:
    """Interpolation Macdonald polynomial after series inversion."""
    t_inv = scalar_inverse(t, "t")
    m = m1 - m2
    pref = _x(1, m2) * _x(2, m1) * q_pochhammer(_x(1, -1), q, m2)
    total = LaurentPoly.zero(2)
    for k in range(m + 1):
        c = q_pochhammer_multi([scalar_pow(q, -m), t], q, k) * scalar_pow(q, k)
        den = q_pochhammer(q * scalar_pow(q, -m) * t_inv, q, k)
        c = c * _scalar_den(den, f"(q^(1-m)/t; q)_{k}")
        c = c * _scalar_den(q_pochhammer(q, q, k), f"(q;q)_{k}")
        c = c * Fraction(-1) ** k * scalar_pow(q, k * (m1 - 1) - (k * (k - 1)) // 2)
        term = LaurentPoly.constant(2, c)
        term = term * q_pochhammer(_x(1) * (scalar_pow(q, -m1 + 1) * t_inv), q, k)
        term = term * q_pochhammer(_x(2, -1), q, m1 - k)
        term = term * _x(2, -k)
        total = total + term
    return pref * total


def ip_jack_n2(m1: int, m2: int, tau) -> LaurentPoly:
    """Interpolation Jack polynomial for n = 2."""
    m = m1 - m2
    pref = Fraction(-1) ** (m1 + m2) * shifted_factorial(-_x(1), m2)
    total = LaurentPoly.zero(2)
    for k in range(m + 1):
        c = shifted_factorial_multi([-m, tau], k)
        c = c * _scalar_den(shifted_factorial(1 - m - tau, k), f"(1-m-tau)_{k}")
        c = c * Fraction(1, _fact(k)) * Fraction(-1) ** k
        term = LaurentPoly.constant(2, c)
        term = term * shifted_factorial(-m1 + 1 - tau + _x(1), k)
        term = term * shifted_factorial(-_x(2), m1 - k)
        total = total + term
    return pref * total


def ip_bc_jack_n2(m1: int, m2: int, tau, alpha) -> LaurentPoly:
    """BC interpolation Jack polynomial for n = 2."""
    m = m1 - m2
    pref = LaurentPoly.constant(2, Fraction(-1) ** (m1 + m2))
    for i in (1, 2):
        pref = pref * shifted_factorial(alpha + _x(i), m2)
        pref = pref * shifted_factorial(alpha - _x(i), m2)
    total = LaurentPoly.zero(2)
    base = m2 + tau + alpha
    for k in range(m + 1):
        c = shifted_factorial_multi([-m, tau], k)
        c = c * _scalar_den(shifted_factorial(1 - m - tau, k), f"(1-m-tau)_{k}")
        c = c * Fraction(1, _fact(k))
        term = LaurentPoly.constant(2, c)
        term = term * shifted_factorial(m2 + alpha + _x(2), k)
        term = term * shifted_factorial(m2 + alpha - _x(2), k)
        term = term * shifted_factorial(base + _x(1) + k, m - k)
        term = term * shifted_factorial(base - _x(1) + k, m - k)
        total = total + term
    return pref * total


# ---------------------------------------------------------------------------
# Koornwinder and BC-Jacobi oracles for n = 2
# ---------------------------------------------------------------------------

def _koorn_ratio_n2(k1, k2, m1, m2, q, t, b):
    """Value ratio of BC interpolation polynomials at the two nodes."""
    b2 = b * b
    t_inv = scalar_inverse(t, "t")
    num = q_pochhammer_multi(
        [scalar_pow(q, m1) * t * b2, scalar_pow(q, -m1) * t_inv,
         scalar_pow(q, m2) * b2, scalar_pow(q, -m2)], q, k2)
    den = q_pochhammer_multi(
        [scalar_pow(q, k1) * t * b2, scalar_pow(q, -k1) * t_inv,
         scalar_pow(q, k2) * b2, scalar_pow(q, -k2)], q, k2)
    acc = num * _scalar_den(den, "node Pochhammer block (order k2)")
    num = q_pochhammer_multi(
        [scalar_pow(q, m1 + k2) * t * t * b2, scalar_pow(q, k2 - m1)], q, k1 - k2)
    den = q_pochhammer_multi(
        [scalar_pow(q, k1 + k2) * t * t * b2, scalar_pow(q, k2 - k1)], q, k1 - k2)
    acc = acc * num * _scalar_den(den, "node Pochhammer block (order k1-k2)")
    phi = hypergeometric_terminating(
        "rphis",
        [scalar_pow(q, -k1 + k2), t, scalar_pow(q, m2 + k2) * b2, scalar_pow(q, k2 - m2)],
        [q * scalar_pow(q, -k1 + k2) * t_inv, scalar_pow(q, m1 + k2) * t * t * b2,
         scalar_pow(q, k2 - m1)],
        q, q, k1 - k2)
    return acc * phi


def _koorn_principal_n2(k1, k2, q, t, a, b):
    """Principal value of the Koornwinder polynomial at (t a1, a1)."""
    a1, a2, a3, a4 = a
    b2 = b * b
    acc = scalar_pow(t, -k1) * scalar_pow(a1, -(k1 + k2))
    acc = acc * q_pochhammer(t * b2, q, k1) * q_pochhammer(b2, q, k2)
    den = q_pochhammer(t * t * b2, q, 2 * k1) * q_pochhammer(b2, q, 2 * k2)
    acc = acc * _scalar_den(den, "principal denominator Pochhammers")
    acc = acc * q_pochhammer_multi([t * a1 * a2, t * a1 * a3, t * a1 * a4], q, k1)
    acc = acc * q_pochhammer_multi([a1 * a2, a1 * a3, a1 * a4], q, k2)
    acc = acc * q_pochhammer(t * t * b2, q, k1 + k2)
    acc = acc * _scalar_den(q_pochhammer(t * b2, q, k1 + k2), f"(t a1'^2; q)_{k1 + k2}")
    acc = acc * q_pochhammer(t * t, q, k1 - k2)
    acc = acc * _scalar_den(q_pochhammer(t, q, k1 - k2), f"(t; q)_{k1 - k2}")
    return acc


def koornwinder_n2(m1: int, m2: int, q, t, a, a_dual_1) -> LaurentPoly:
    """Koornwinder polynomial for n = 2 from the explicit double sum."""
    b = a_dual_1
    e_top = _koorn_principal_n2(m1, m2, q, t, a, b)
    total = LaurentPoly.zero(2)
    for k2 in range(m2 + 1):
        for k1 in range(k2, m1 + 1):
            coeff = _koorn_ratio_n2(k1, k2, m1, m2, q, t, b)
            e_k = _koorn_principal_n2(k1, k2, q, t, a, b)
            coeff = coeff * _scalar_den(e_k, f"principal value at ({k1},{k2})")
            total = total + coeff * ip_bc_mac_n2(k1, k2, q, t, a[0])
    return e_top * total


def _jacobi_ratio_n2(k1, k2, m1, m2, tau, ap):
    num = shifted_factorial_multi(
        [m1 + tau + 2 * ap, -m1 - tau, m2 + 2 * ap, Fraction(-m2)], k2)
    den = shifted_factorial_multi(
        [k1 + tau + 2 * ap, -k1 - tau, k2 + 2 * ap, Fraction(-k2)], k2)
    acc = num * _scalar_den(den, "node factorial block (order k2)")
    num = shifted_factorial_multi([m1 + k2 + 2 * tau + 2 * ap, Fraction(k2 - m1)], k1 - k2)
    den = shifted_factorial_multi([k1 + k2 + 2 * tau + 2 * ap, Fraction(k2 - k1)], k1 - k2)
    acc = acc * num * _scalar_den(den, "node factorial block (order k1-k2)")
    f = hypergeometric_terminating(
        "rFs",
        [Fraction(-k1 + k2), tau, m2 + k2 + 2 * ap, Fraction(k2 - m2)],
        [1 - k1 + k2 - tau, m1 + k2 + 2 * tau + 2 * ap, Fraction(k2 - m1)],
        None, Fraction(1), k1 - k2)
    return acc * f


def _jacobi_principal_n2(k1, k2, tau, alpha, ap):
    acc = Fraction(-1) ** (k1 + k2)
    acc = acc * shifted_factorial_multi([tau + 2 * ap, tau + alpha + 1], k1)
    acc = acc * shifted_factorial_multi([2 * ap, alpha + 1], k2)
    den = shifted_factorial(2 * tau + 2 * ap, 2 * k1) * shifted_factorial(2 * ap, 2 * k2)
    acc = acc * _scalar_den(den, "origin denominator factorials")
    acc = acc * shifted_factorial(2 * tau + 2 * ap, k1 + k2)
    acc = acc * _scalar_den(shifted_factorial(tau + 2 * ap, k1 + k2), f"(tau + 2 alpha')_{k1 + k2}")
    acc = acc * shifted_factorial(2 * tau, k1 - k2)
    acc = acc * _scalar_den(shifted_factorial(tau, k1 - k2), f"(tau)_{k1 - k2}")
    return acc


def jacobi_n2(m1: int, m2: int, tau, alpha, beta) -> LaurentPoly:
    """BC-Jacobi polynomial for n = 2 from the explicit double sum."""
    ap = (alpha + beta + 1) * Fraction(1, 2)
    e_top = _jacobi_principal_n2(m1, m2, tau, alpha, ap)
    total = LaurentPoly.zero(2)
    for k2 in range(m2 + 1):
        for k1 in range(k2, m1 + 1):
            coeff = _jacobi_ratio_n2(k1, k2, m1, m2, tau, ap)
            e_k = _jacobi_principal_n2(k1, k2, tau, alpha, ap)
            coeff = coeff * _scalar_den(e_k, f"origin value at ({k1},{k2})")
            total = total + coeff * jack_n2_ultraspherical_form(k1, k2, tau)
    return e_top * total


def two_var_formula(formula_id: str, m1: int, m2: int, params: dict) -> LaurentPoly:
    """Dispatch one of the registered closed-form n=2 constructions."""
    if not m1 >= m2 >= 0:
        raise ValueError("need m1 >= m2 >= 0")
    if formula_id == "ip_bc_mac_87":
        if m2 != 0:
            raise ValueError("one-row formula needs m2 = 0")
        return ip_bc_mac_n2_row(m1, params["q"], params["t"], params["a"])
    if formula_id == "ip_bc_mac_88":
        return ip_bc_mac_n2(m1, m2, params["q"], params["t"], params["a"])
    if formula_id == "ip_mac_89":
        return ip_mac_n2(m1, m2, params["q"], params["t"])
    if formula_id == "mac_90_92":
        return mac_n2_sum_form(m1, m2, params["q"], params["t"])
    if formula_id == "ip_jack_2":
        return ip_jack_n2(m1, m2, params["tau"])
    if formula_id == "bc_ip_jack_2":
        return ip_bc_jack_n2(m1, m2, params["tau"], params["alpha"])
    if formula_id == "jack_96":
        return jack_n2_ultraspherical_form(m1, m2, params["tau"])
    if formula_id == "koorn_93_95":
        return koornwinder_n2(
            m1, m2, params["q"], params["t"], params["a"], params["a_dual_1"]
        )
    if formula_id == "jacobi_97_100":
        return jacobi_n2(m1, m2, params["tau"], params["alpha"], params["beta"])
    raise ValueError(f"unknown formula id {formula_id!r}")


# ---------------------------------------------------------------------------
# one-variable prelude
# ---------------------------------------------------------------------------

def _y(power: int = 1) -> LaurentPoly:
    return LaurentPoly.variable(1, 1, power)


def interp_one_var(k: int) -> LaurentPoly:
    """x(x-1)...(x-k+1), the monic polynomial vanishing at 0..k-1."""
    acc = LaurentPoly.one(1)
    for j in range(k):
        acc = acc * (_y() - j)
    return acc


def interp_one_var_q(k: int, q) -> LaurentPoly:
    """(x-1)(x-q)...(x-q^(k-1))."""
    acc = LaurentPoly.one(1)
    for j in range(k):
        acc = acc * (_y() - scalar_pow(q, j))
    return acc


def interp_one_var_bc_q(k: int, q, a1) -> LaurentPoly:
    """prod_j (x + 1/x - a1 q^j - 1/(a1 q^j)), symmetric under inversion."""
    acc = LaurentPoly.one(1)
    for j in range(k):
        node = a1 * scalar_pow(q, j)
        acc = acc * (_y() + _y(-1) - node - scalar_inverse(node, f"a1 q^{j}"))
    return acc


def interp_one_var_bc(k: int, alpha) -> LaurentPoly:
    """prod_j (x^2 - (alpha + j)^2), the even interpolation polynomial."""
    acc = LaurentPoly.one(1)
    for j in range(k):
        node = alpha + j
        acc = acc * (_y() * _y() - node * node)
    return acc


def q_binomial_expansion(n: int, q) -> LaurentPoly:
    """The terminating 2-phi-0 expansion that should equal x^n."""
    return hypergeometric_terminating(
        "rphis", [scalar_pow(q, -n), _y(-1)], [], q, _y() * scalar_pow(q, n), n
    )


def binomial_expansion(n: int) -> LaurentPoly:
    """sum_k C(n, k) x^k, which should equal (x+1)^n."""
    terms = {(k,): Fraction(comb(n, k)) for k in range(n + 1)}
    return LaurentPoly(1, terms)


def jacobi_one_var(n: int, alpha, beta) -> LaurentPoly:
    """Normalized one-variable Jacobi polynomial as a 2F1 in x."""
    return hypergeometric_terminating(
        "rFs", [Fraction(-n), n + alpha + beta + 1], [alpha + 1], None, _y(), n
    )


def askey_wilson_one_var(n: int, q, a) -> LaurentPoly:
    """Normalized Askey-Wilson polynomial as a terminating 4-phi-3 in x."""
    a1, a2, a3, a4 = a
    return hypergeometric_terminating(
        "rphis",
        [scalar_pow(q, -n), scalar_pow(q, n - 1) * a1 * a2 * a3 * a4,
         _y() * a1, _y(-1) * a1],
        [a1 * a2, a1 * a3, a1 * a4],
        q, q, n)


def one_var_prelude(formula_id: str, args: dict):
    """Dispatch the registered one-variable objects."""
    if formula_id == "ip_k":
        return interp_one_var(args["k"])
    if formula_id == "ip_k_q":
        return interp_one_var_q(args["k"], args["q"])
    if formula_id == "eq76":
        return interp_one_var_bc_q(args["k"], args["q"], args["a1"])
    if formula_id == "ip_k_alpha":
        return interp_one_var_bc(args["k"], args["alpha"])
    if formula_id == "eq73":
        return q_binomial_expansion(args["n"], args["q"])
    if formula_id == "eq74":
        return jacobi_one_var(args["n"], args["alpha"], args["beta"])
    if formula_id == "eq75":
        return askey_wilson_one_var(args["n"], args["q"], args["a"])
    if formula_id == "eq78":
        return binomial_expansion(args["n"])
    raise ValueError(f"unknown prelude id {formula_id!r}")
