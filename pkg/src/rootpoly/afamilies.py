"""Macdonald, Jack and their interpolation analogues via tableau sums.

Each polynomial is assembled as a sum over reverse tableaux of products
of per-box factors, weighted by a ratio of arm/leg expressions along the
chain of horizontal strips.  Closed-form special values and generalized
binomial coefficients are provided alongside.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonGenericParameterError
from .fieldscalar import scalar_inverse, scalar_pow
from .laurent import LaurentPoly
from .partitions import (
    Partition,
    ReverseTableau,
    arm_leg_data,
    cells,
    enumerate_reverse_tableaux,
    part,
    r_minus_c,
)
from .qseries import q_pochhammer, shifted_factorial

MACDONALD = "macdonald"
JACK = "jack"
INTERP_MACDONALD = "interp_macdonald"
INTERP_JACK = "interp_jack"

A_TYPE_FAMILIES = (MACDONALD, JACK, INTERP_MACDONALD, INTERP_JACK)


@dataclass(frozen=True)
class ATypeParams:
    """Parameter bundle: (q, t) for the q-case or tau for the one-case."""

    n: int
    mode: str
    q: object = None
    t: object = None
    tau: object = None

    @staticmethod
    def q_case(n: int, q, t) -> "ATypeParams":
        return ATypeParams(n=n, mode="q_case", q=q, t=t)

    @staticmethod
    def one_case(n: int, tau) -> "ATypeParams":
        return ATypeParams(n=n, mode="one_case", tau=tau)


def _b_ratio_q(shape: Partition, s, q, t):
    """(numerator, denominator-factor-name, denominator) of b_shape(s; q, t)."""
    a, l, _, _ = arm_leg_data(shape, s)
    num = 1 - scalar_pow(q, a) * scalar_pow(t, l + 1)
    den = 1 - scalar_pow(q, a + 1) * scalar_pow(t, l)
    return num, den, f"1 - q^{a + 1} t^{l}"


def _b_ratio_one(shape: Partition, s, tau):
    a, l, _, _ = arm_leg_data(shape, s)
    num = a + tau * (l + 1)
    den = a + tau * l + 1
    return num, den, f"{a} + {l} tau + 1"


def tableau_weight(T: ReverseTableau, params: ATypeParams):
    """The chain-product weight of a reverse tableau."""
    acc = Fraction(1)
    for outer, inner in T.strips():
        for s in r_minus_c(outer, inner):
            if params.mode == "q_case":
                n_num, n_den, n_name = _b_ratio_q(inner, s, params.q, params.t)
                d_num, d_den, d_name = _b_ratio_q(outer, s, params.q, params.t)
            else:
                n_num, n_den, n_name = _b_ratio_one(inner, s, params.tau)
                d_num, d_den, d_name = _b_ratio_one(outer, s, params.tau)
            acc = acc * n_num * scalar_inverse(n_den, n_name)
            acc = acc * d_den * scalar_inverse(d_num, d_name + " (numerator of b)")
    return acc


def _box_factor(family: str, params: ATypeParams, lam: Partition, s, entry: int) -> LaurentPoly:
    n = params.n
    x = LaurentPoly.variable(n, entry)
    if family == MACDONALD or family == JACK:
        return x
    _, _, ac, lc = arm_leg_data(lam, s)
    if family == INTERP_MACDONALD:
        shift = scalar_pow(params.q, ac) * scalar_pow(params.t, n - entry - lc)
        return x - shift
    if family == INTERP_JACK:
        shift = ac + params.tau * (n - entry - lc)
        return x - shift
    raise ValueError(f"unknown family {family!r}")


def _check_mode(family: str, params: ATypeParams) -> None:
    needs_q = family in (MACDONALD, INTERP_MACDONALD)
    if needs_q != (params.mode == "q_case"):
        raise ValueError(f"family {family} incompatible with mode {params.mode}")


def a_type_polynomial(family: str, lam: Partition, params: ATypeParams) -> LaurentPoly:
    """The tableau-sum expansion of one of the four A-type families."""
    _check_mode(family, params)
    n = params.n
    if len(lam) > n:
        raise ValueError(f"partition {lam} longer than n={n}")
    total = LaurentPoly.zero(n)
    for T in enumerate_reverse_tableaux(lam, n):
        term = LaurentPoly.constant(n, tableau_weight(T, params))
        ent = T.entries()
        for s in cells(lam):
            term = term * _box_factor(family, params, lam, s, ent[s])
        total = total + term
    return total


def a_type_evaluation(family: str, lam: Partition, params: ATypeParams):
    """Closed-form value at the principal point (t-powers resp. all-ones)."""
    n = params.n
    if family == MACDONALD:
        _check_mode(family, params)
        q, t = params.q, params.t
        acc = Fraction(1) * scalar_pow(t, sum(i * p for i, p in enumerate(lam)))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                d = part(lam, i) - part(lam, j)
                num = q_pochhammer(scalar_pow(t, j - i + 1), q, d)
                den = q_pochhammer(scalar_pow(t, j - i), q, d)
                acc = acc * num * scalar_inverse(den, f"(t^{j - i}; q)_{d}")
        return acc
    if family == JACK:
        _check_mode(family, params)
        tau = params.tau
        acc = Fraction(1)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                d = part(lam, i) - part(lam, j)
                num = shifted_factorial((j - i + 1) * tau, d)
                den = shifted_factorial((j - i) * tau, d)
                acc = acc * num * scalar_inverse(den, f"(({j - i}) tau)_{d}")
        return acc
    raise ValueError(f"no principal evaluation for family {family!r}")


def spectral_point_a(mu: Partition, params: ATypeParams):
    """The grid node attached to mu: q^mu t^delta, resp. mu + tau*delta."""
    n = params.n
    if params.mode == "q_case":
        return tuple(
            scalar_pow(params.q, part(mu, i)) * scalar_pow(params.t, n - i)
            for i in range(1, n + 1)
        )
    return tuple(part(mu, i) + params.tau * (n - i) for i in range(1, n + 1))


def generalized_binomial(lam: Partition, mu: Partition, params: ATypeParams):
    """Ratio of interpolation-polynomial values at the lam and mu nodes."""
    family = INTERP_MACDONALD if params.mode == "q_case" else INTERP_JACK
    p_mu = a_type_polynomial(family, mu, params)
    num = p_mu.evaluate(spectral_point_a(lam, params))
    den = p_mu.evaluate(spectral_point_a(mu, params))
    return num * scalar_inverse(den, f"interpolation value at node of {mu}")


def interpolation_node_value(lam: Partition, params: ATypeParams):
    """Value of the interpolation polynomial at its own node, by evaluation."""
    family = INTERP_MACDONALD if params.mode == "q_case" else INTERP_JACK
    p = a_type_polynomial(family, lam, params)
    return p.evaluate(spectral_point_a(lam, params))
