"""Constant-term and Beta-moment functionals with polynomial weights.

Torus integrals against a weight that is itself a Laurent polynomial
reduce to extracting the coefficient of the zero exponent vector.  The
Beta-moment functional integrates monomials over [0,1]^n against
x^alpha (1-x)^beta per variable, normalized so the moment of 1 is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonGenericParameterError
from .fieldscalar import scalar_inverse
from .laurent import LaurentPoly
from .qseries import q_pochhammer, shifted_factorial


@dataclass(frozen=True)
class MomentFunctionalSpec:
    """Which moment functional to apply.

    kind "constant_term" pairs a Laurent polynomial against a polynomial
    weight supplied at call time; kind "jacobi_beta" carries the Jacobi
    parameters (alpha, beta) and a positive integer tau.
    """

    kind: str
    alpha: object = None
    beta: object = None
    tau: int = 1

    def __post_init__(self):
        if self.kind not in ("constant_term", "jacobi_beta"):
            raise ValueError(f"unknown moment kind {self.kind!r}")
        if self.kind == "jacobi_beta" and (not isinstance(self.tau, int) or self.tau < 1):
            raise NonGenericParameterError(f"tau = {self.tau} is not a positive integer")


def constant_term(p: LaurentPoly):
    """Coefficient of the zero exponent vector."""
    return p.constant_coefficient()


def constant_term_pairing(p: LaurentPoly, weight: LaurentPoly):
    """CT(p * weight) without forming the full product."""
    if p.nvars != weight.nvars:
        raise ValueError("mixed variable counts")
    acc = Fraction(0)
    small, large = (p, weight) if len(p.terms) <= len(weight.terms) else (weight, p)
    for exps, c in small.terms.items():
        other = large.terms.get(tuple(-e for e in exps))
        if other is not None:
            acc = acc + c * other
    return acc


def _power_of(q, t, max_exp: int = 64) -> int | None:
    """Integer k in [0, max_exp] with t == q**k, if any."""
    acc = Fraction(1) * q ** 0
    for k in range(max_exp + 1):
        if acc == t:
            return k
        acc = acc * q
    return None


def macdonald_weight(n: int, q, t) -> LaurentPoly:
    """The torus weight prod_{i != j} (x_i/x_j; q)_k, requiring t = q^k."""
    k = _power_of(q, t)
    if k is None:
        raise NonGenericParameterError(f"t is not an integer power of q (t={t!r})")
    acc = LaurentPoly.one(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                ratio = LaurentPoly.variable(n, i) * LaurentPoly.variable(n, j, -1)
                acc = acc * q_pochhammer(ratio, q, k)
    return acc


def jack_weight(n: int, tau: int) -> LaurentPoly:
    """The torus weight prod_{i<j} ((1 - x_i/x_j)(1 - x_j/x_i))^tau."""
    if not isinstance(tau, int) or tau < 1:
        raise NonGenericParameterError(f"tau = {tau} is not a positive integer")
    acc = LaurentPoly.one(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ratio = LaurentPoly.variable(n, i) * LaurentPoly.variable(n, j, -1)
            acc = acc * ((1 - ratio) * (1 - ratio.invert_variables())) ** tau
    return acc


def vandermonde_even_power(n: int, tau: int) -> LaurentPoly:
    """prod_{i<j} (x_i - x_j)^(2 tau)."""
    acc = LaurentPoly.one(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            diff = LaurentPoly.variable(n, i) - LaurentPoly.variable(n, j)
            acc = acc * diff ** (2 * tau)
    return acc


def beta_monomial_moment(exps, alpha, beta):
    """Normalized moment of prod_j x_j^(c_j): prod (alpha+1)_c / (alpha+beta+2)_c."""
    acc = Fraction(1)
    for c in exps:
        if c < 0:
            raise ValueError("Beta moments need nonnegative exponents")
        num = shifted_factorial(alpha + 1, c)
        den = shifted_factorial(alpha + beta + 2, c)
        acc = acc * num * scalar_inverse(den, f"(alpha+beta+2)_{c}")
    return acc


def apply_moment(spec: MomentFunctionalSpec, p: LaurentPoly, weight_params=None):
    """Apply the functional described by ``spec`` to ``p``.

    For kind "constant_term" pass the weight as ``weight_params``, either a
    prebuilt LaurentPoly or a tuple ("macdonald", q, t) / ("jack", tau).
    For kind "jacobi_beta" the weight prod (x_i - x_j)^(2 tau) is included
    here and ``p`` must be an ordinary polynomial.
    """
    if spec.kind == "constant_term":
        if isinstance(weight_params, LaurentPoly):
            weight = weight_params
        elif weight_params and weight_params[0] == "macdonald":
            weight = macdonald_weight(p.nvars, weight_params[1], weight_params[2])
        elif weight_params and weight_params[0] == "jack":
            weight = jack_weight(p.nvars, weight_params[1])
        else:
            raise ValueError("constant_term kind needs a weight")
        return constant_term_pairing(p, weight)

    full = p * vandermonde_even_power(p.nvars, spec.tau)
    acc = Fraction(0)
    for exps, c in full.terms.items():
        acc = acc + c * beta_monomial_moment(exps, spec.alpha, spec.beta)
    return acc
