"""BC-type interpolation polynomials, Koornwinder and BC-Jacobi families.

The interpolation families come from tableau sums; the two orthogonal
families are constructed through their binomial expansions, with every
special value supplied by a closed product formula.  All arithmetic is
exact; any vanishing denominator aborts with the offending factor named.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .afamilies import ATypeParams, JACK, a_type_polynomial, tableau_weight
from .errors import NonGenericParameterError
from .fieldscalar import scalar_inverse, scalar_pow
from .laurent import LaurentPoly
from .partitions import (
    Partition,
    arm_leg_data,
    cells,
    conjugate,
    contains,
    enumerate_partitions,
    enumerate_reverse_tableaux,
    part,
)
from .qseries import q_pochhammer, shifted_factorial


@dataclass(frozen=True)
class BCInterpParams:
    """Parameters (q, t, a) for the q-case or (tau, alpha) for the one-case."""

    n: int
    mode: str
    q: object = None
    t: object = None
    a: object = None
    tau: object = None
    alpha: object = None

    @staticmethod
    def q_case(n: int, q, t, a) -> "BCInterpParams":
        return BCInterpParams(n=n, mode="q_case", q=q, t=t, a=a)

    @staticmethod
    def one_case(n: int, tau, alpha) -> "BCInterpParams":
        return BCInterpParams(n=n, mode="one_case", tau=tau, alpha=alpha)

    def a_params(self) -> ATypeParams:
        if self.mode == "q_case":
            return ATypeParams.q_case(self.n, self.q, self.t)
        return ATypeParams.one_case(self.n, self.tau)


@dataclass(frozen=True)
class KoornwinderParams:
    """The 5-parameter bundle plus the caller-supplied dual square root."""

    n: int
    q: object
    t: object
    a: tuple
    a_dual_1: object

    def __post_init__(self):
        if len(self.a) != 4:
            raise ValueError("need exactly four parameters a1..a4")
        prod = self.a[0] * self.a[1] * self.a[2] * self.a[3]
        if self.a_dual_1 * self.a_dual_1 * self.q != prod:
            raise ValueError("a_dual_1^2 must equal a1 a2 a3 a4 / q")

    def dual(self) -> "KoornwinderParams":
        return KoornwinderParams(
            n=self.n, q=self.q, t=self.t,
            a=dual_parameters(self.a, self.q, self.a_dual_1),
            a_dual_1=self.a[0],
        )


@dataclass(frozen=True)
class JacobiParams:
    """BC-Jacobi parameters; alpha_prime = (alpha + beta + 1) / 2 exactly."""

    n: int
    tau: object
    alpha: object
    beta: object

    @property
    def alpha_prime(self):
        return (self.alpha + self.beta + 1) * Fraction(1, 2)


def dual_parameters(a: tuple, q, a_dual_1) -> tuple:
    """(a1', a2', a3', a4') with a1' the supplied root of a1 a2 a3 a4 / q."""
    a1, a2, a3, a4 = a
    if a_dual_1 * a_dual_1 * q != a1 * a2 * a3 * a4:
        raise ValueError("a_dual_1^2 must equal a1 a2 a3 a4 / q")
    inv = scalar_inverse(a_dual_1, "a_dual_1")
    return (a_dual_1, a1 * a2 * inv, a1 * a3 * inv, a1 * a4 * inv)


# ---------------------------------------------------------------------------
# interpolation polynomials
# ---------------------------------------------------------------------------

def bc_interp_polynomial(lam: Partition, params: BCInterpParams) -> LaurentPoly:
    """Tableau sum for the BC-type interpolation polynomial."""
    n = params.n
    if len(lam) > n:
        raise ValueError(f"partition {lam} longer than n={n}")
    apar = params.a_params()
    total = LaurentPoly.zero(n)
    for T in enumerate_reverse_tableaux(lam, n):
        term = LaurentPoly.constant(n, tableau_weight(T, apar))
        ent = T.entries()
        for s in cells(lam):
            k = ent[s]
            _, _, ac, lc = arm_leg_data(lam, s)
            x = LaurentPoly.variable(n, k)
            if params.mode == "q_case":
                node = scalar_pow(params.q, ac) * scalar_pow(params.t, n - k - lc) * params.a
                node_inv = scalar_inverse(node, "spectral shift q^a' t^(n-k-l') a")
                term = term * (x - node) * (1 - node_inv * LaurentPoly.variable(n, k, -1))
            else:
                node = ac + params.tau * (n - k - lc) + params.alpha
                term = term * (x * x - node * node)
        total = total + term
    return total


def spectral_point_bc(mu: Partition, params: BCInterpParams):
    """The node q^mu t^delta a, resp. mu + tau*delta + alpha."""
    n = params.n
    if params.mode == "q_case":
        return tuple(
            scalar_pow(params.q, part(mu, i)) * scalar_pow(params.t, n - i) * params.a
            for i in range(1, n + 1)
        )
    return tuple(
        part(mu, i) + params.tau * (n - i) + params.alpha for i in range(1, n + 1)
    )


def bc_interp_evaluation(lam: Partition, params: BCInterpParams, form: str = "box_product"):
    """Value at the polynomial's own node, as a closed product.

    form "box_product" multiplies one factor pair per diagram box; form
    "factored" uses the equivalent Pochhammer product over rows and row
    pairs.  The two must agree identically.
    """
    n = params.n
    lamc = conjugate(lam)
    if params.mode == "q_case":
        q, t, a = params.q, params.t, params.a
        if form == "box_product":
            acc = (
                scalar_pow(q, -sum(p * p for p in lam))
                * scalar_pow(t, -sum(p * (n - i) for i, p in enumerate(lam, start=1)))
                * scalar_pow(a, -sum(lam))
            )
            for (i, j) in cells(lam):
                cc = part(lamc, j)
                acc = acc * (1 - scalar_pow(q, lam[i - 1] - j + 1) * scalar_pow(t, cc - i))
                acc = acc * (
                    1 - a * a * scalar_pow(q, lam[i - 1] + j - 1)
                    * scalar_pow(t, cc - i + 2 * (n - cc))
                )
            return acc
        if form == "factored":
            acc = (
                scalar_pow(q, -sum(p * p for p in lam))
                * scalar_pow(t, -sum(p * (n - i) for i, p in enumerate(lam, start=1)))
                * scalar_pow(a, -sum(lam))
            )
            a2 = a * a
            for j in range(1, n + 1):
                lj = part(lam, j)
                acc = acc * q_pochhammer(q * scalar_pow(t, n - j), q, lj)
                acc = acc * q_pochhammer(scalar_pow(t, 2 * n - 2 * j) * a2, q, 2 * lj)
                den = q_pochhammer(scalar_pow(t, n - j) * a2, q, lj)
                acc = acc * scalar_inverse(den, f"(t^{n - j} a^2; q)_{lj}")
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    sp = part(lam, i) + part(lam, j)
                    dm = part(lam, i) - part(lam, j)
                    acc = acc * q_pochhammer(scalar_pow(t, 2 * n - i - j) * a2, q, sp)
                    den = q_pochhammer(scalar_pow(t, 2 * n - i - j + 1) * a2, q, sp)
                    acc = acc * scalar_inverse(den, f"(t^{2 * n - i - j + 1} a^2; q)_{sp}")
                    acc = acc * q_pochhammer(q * scalar_pow(t, j - i - 1), q, dm)
                    den = q_pochhammer(q * scalar_pow(t, j - i), q, dm)
                    acc = acc * scalar_inverse(den, f"(q t^{j - i}; q)_{dm}")
            return acc
        raise ValueError(f"unknown form {form!r}")

    tau, alpha = params.tau, params.alpha
    if form == "box_product":
        acc = Fraction(1)
        for (i, j) in cells(lam):
            cc = part(lamc, j)
            acc = acc * (lam[i - 1] - j + 1 + tau * (cc - i))
            acc = acc * (2 * alpha + lam[i - 1] + j - 1 + tau * (cc - i + 2 * (n - cc)))
        return acc
    if form == "factored":
        acc = Fraction(1)
        for j in range(1, n + 1):
            lj = part(lam, j)
            acc = acc * shifted_factorial((n - j) * tau + 1, lj)
            acc = acc * shifted_factorial(2 * (n - j) * tau + 2 * alpha, 2 * lj)
            den = shifted_factorial((n - j) * tau + 2 * alpha, lj)
            acc = acc * scalar_inverse(den, f"(({n - j}) tau + 2 alpha)_{lj}")
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                sp = part(lam, i) + part(lam, j)
                dm = part(lam, i) - part(lam, j)
                acc = acc * shifted_factorial((2 * n - i - j) * tau + 2 * alpha, sp)
                den = shifted_factorial((2 * n - i - j + 1) * tau + 2 * alpha, sp)
                acc = acc * scalar_inverse(den, f"(({2 * n - i - j + 1}) tau + 2 alpha)_{sp}")
                acc = acc * shifted_factorial((j - i - 1) * tau + 1, dm)
                den = shifted_factorial((j - i) * tau + 1, dm)
                acc = acc * scalar_inverse(den, f"(({j - i}) tau + 1)_{dm}")
        return acc
    raise ValueError(f"unknown form {form!r}")


def bc_interp_reduction(lam: Partition, params: BCInterpParams):
    """Split off the common last part: returns (prefactor, reduced, shifted).

    The identity prefactor * P_reduced(shifted params) = P_lam holds and is
    checked by the reduction suite.  Requires lam to have n positive parts.
    """
    n = params.n
    m = part(lam, n)
    if m < 1:
        raise ValueError("reduction needs lam_n >= 1")
    reduced = tuple(p - m for p in lam if p > m)
    if params.mode == "q_case":
        q, a = params.q, params.a
        pref = LaurentPoly.constant(
            n,
            scalar_pow(-Fraction(1) * a, -n * m) * scalar_pow(q, -(n * m * (m - 1)) // 2),
        )
        for j in range(1, n + 1):
            xj = LaurentPoly.variable(n, j)
            pref = pref * q_pochhammer(xj * a, q, m) * q_pochhammer(xj ** -1 * a, q, m)
        shifted = BCInterpParams.q_case(n, q, params.t, scalar_pow(q, m) * a)
        return pref, reduced, shifted

    alpha = params.alpha
    pref = LaurentPoly.constant(n, Fraction(-1) ** (n * m))
    for j in range(1, n + 1):
        xj = LaurentPoly.variable(n, j)
        pref = pref * shifted_factorial(alpha + xj, m) * shifted_factorial(alpha - xj, m)
    shifted = BCInterpParams.one_case(n, params.tau, m + alpha)
    return pref, reduced, shifted


# ---------------------------------------------------------------------------
# orthogonal families through the binomial formulas
# ---------------------------------------------------------------------------

def koornwinder_evaluation(lam: Partition, params: KoornwinderParams):
    """Closed product for the value at (t^delta a1)."""
    n, q, t = params.n, params.q, params.t
    a1, a2, a3, a4 = params.a
    b2 = params.a_dual_1 * params.a_dual_1
    acc = scalar_pow(t, -sum(p * (n - i) for i, p in enumerate(lam, start=1)))
    acc = acc * scalar_pow(a1, -sum(lam))
    for j in range(1, n + 1):
        lj = part(lam, j)
        acc = acc * q_pochhammer(scalar_pow(t, n - j) * b2, q, lj)
        den = q_pochhammer(scalar_pow(t, 2 * n - 2 * j) * b2, q, 2 * lj)
        acc = acc * scalar_inverse(den, f"(t^{2 * n - 2 * j} a1'^2; q)_{2 * lj}")
        for prod in (a1 * a2, a1 * a3, a1 * a4):
            acc = acc * q_pochhammer(scalar_pow(t, n - j) * prod, q, lj)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            sp = part(lam, i) + part(lam, j)
            dm = part(lam, i) - part(lam, j)
            acc = acc * q_pochhammer(scalar_pow(t, 2 * n - i - j + 1) * b2, q, sp)
            den = q_pochhammer(scalar_pow(t, 2 * n - i - j) * b2, q, sp)
            acc = acc * scalar_inverse(den, f"(t^{2 * n - i - j} a1'^2; q)_{sp}")
            acc = acc * q_pochhammer(scalar_pow(t, j - i + 1), q, dm)
            den = q_pochhammer(scalar_pow(t, j - i), q, dm)
            acc = acc * scalar_inverse(den, f"(t^{j - i}; q)_{dm}")
    return acc


def jacobi_evaluation(lam: Partition, params: JacobiParams):
    """Closed product for the value at the origin."""
    n, tau = params.n, params.tau
    alpha, ap = params.alpha, params.alpha_prime
    acc = Fraction(-1) ** sum(lam)
    for j in range(1, n + 1):
        lj = part(lam, j)
        acc = acc * shifted_factorial((n - j) * tau + 2 * ap, lj)
        acc = acc * shifted_factorial((n - j) * tau + alpha + 1, lj)
        den = shifted_factorial((2 * n - 2 * j) * tau + 2 * ap, 2 * lj)
        acc = acc * scalar_inverse(den, f"(({2 * n - 2 * j}) tau + 2 alpha')_{2 * lj}")
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            sp = part(lam, i) + part(lam, j)
            dm = part(lam, i) - part(lam, j)
            acc = acc * shifted_factorial((2 * n - i - j + 1) * tau + 2 * ap, sp)
            den = shifted_factorial((2 * n - i - j) * tau + 2 * ap, sp)
            acc = acc * scalar_inverse(den, f"(({2 * n - i - j}) tau + 2 alpha')_{sp}")
            acc = acc * shifted_factorial((j - i + 1) * tau, dm)
            den = shifted_factorial((j - i) * tau, dm)
            acc = acc * scalar_inverse(den, f"(({j - i}) tau)_{dm}")
    return acc


def _sub_partitions(lam: Partition):
    return [mu for mu in enumerate_partitions(sum(lam), max(1, len(lam))) if contains(mu, lam)]


def koornwinder_polynomial(lam: Partition, params: KoornwinderParams) -> LaurentPoly:
    """Koornwinder polynomial assembled from its binomial expansion."""
    n, q, t = params.n, params.q, params.t
    a1 = params.a[0]
    b1 = params.a_dual_1
    dual_pars = BCInterpParams.q_case(n, q, t, b1)
    node_lam = spectral_point_bc(lam, dual_pars)
    e_lam = koornwinder_evaluation(lam, params)
    total = LaurentPoly.zero(n)
    for mu in _sub_partitions(lam):
        if len(mu) > n:
            continue
        ip_dual = bc_interp_polynomial(mu, dual_pars)
        num = ip_dual.evaluate(node_lam)
        den = bc_interp_evaluation(mu, dual_pars, form="box_product")
        e_mu = koornwinder_evaluation(mu, params)
        coeff = (
            e_lam
            * num
            * scalar_inverse(den, f"interpolation value at node of {mu}")
            * scalar_inverse(e_mu, f"principal Koornwinder value at {mu}")
        )
        ip = bc_interp_polynomial(mu, BCInterpParams.q_case(n, q, t, a1))
        total = total + coeff * ip
    return total


def jacobi_polynomial(lam: Partition, params: JacobiParams) -> LaurentPoly:
    """BC-Jacobi polynomial assembled from its binomial expansion."""
    n, tau = params.n, params.tau
    ip_pars = BCInterpParams.one_case(n, tau, params.alpha_prime)
    node_lam = spectral_point_bc(lam, ip_pars)
    e_lam = jacobi_evaluation(lam, params)
    jack_pars = ATypeParams.one_case(n, tau)
    total = LaurentPoly.zero(n)
    for mu in _sub_partitions(lam):
        if len(mu) > n:
            continue
        ip_mu = bc_interp_polynomial(mu, ip_pars)
        num = ip_mu.evaluate(node_lam)
        den = bc_interp_evaluation(mu, ip_pars, form="box_product")
        e_mu = jacobi_evaluation(mu, params)
        coeff = (
            e_lam
            * num
            * scalar_inverse(den, f"interpolation value at node of {mu}")
            * scalar_inverse(e_mu, f"Jacobi value at origin for {mu}")
        )
        total = total + coeff * a_type_polynomial(JACK, mu, jack_pars)
    return total


def orthogonal_bc_polynomial(kind: str, lam: Partition, params) -> LaurentPoly:
    if kind == "koornwinder":
        return koornwinder_polynomial(lam, params)
    if kind == "jacobi":
        return jacobi_polynomial(lam, params)
    raise ValueError(f"unknown kind {kind!r}")


def orthogonal_bc_evaluation(kind: str, lam: Partition, params):
    if kind == "koornwinder":
        return koornwinder_evaluation(lam, params)
    if kind == "jacobi":
        return jacobi_evaluation(lam, params)
    raise ValueError(f"unknown kind {kind!r}")


def _jacobi_interp_value_tableau(lam: Partition, mu: Partition, params: JacobiParams):
    """Tableau-sum form of the interpolation value entering the expansion."""
    n, tau, ap = params.n, params.tau, params.alpha_prime
    apar = ATypeParams.one_case(n, tau)
    acc = Fraction(0)
    for T in enumerate_reverse_tableaux(mu, n):
        term = tableau_weight(T, apar)
        ent = T.entries()
        for s in cells(mu):
            k = ent[s]
            _, _, ac, lc = arm_leg_data(mu, s)
            big = part(lam, k) + tau * (n - k) + ap
            small = tau * (n - k) + ap + ac - tau * lc
            term = term * (big * big - small * small)
        acc = acc + term
    return acc


def jacobi_expansion_coefficient(lam: Partition, mu: Partition, params: JacobiParams):
    """Coefficient of the Jack polynomial for mu in the BC-Jacobi for lam.

    The interpolation value in the numerator is computed both by point
    evaluation and by its tableau sum; a disagreement would indicate an
    internal inconsistency and raises.
    """
    if not contains(mu, lam):
        raise ValueError(f"{mu} not contained in {lam}")
    ip_pars = BCInterpParams.one_case(params.n, params.tau, params.alpha_prime)
    by_eval = bc_interp_polynomial(mu, ip_pars).evaluate(spectral_point_bc(lam, ip_pars))
    by_tableau = _jacobi_interp_value_tableau(lam, mu, params)
    if by_eval != by_tableau:
        raise AssertionError("tableau-sum and point-evaluation values disagree")
    den = bc_interp_evaluation(mu, ip_pars, form="box_product")
    e_lam = jacobi_evaluation(lam, params)
    e_mu = jacobi_evaluation(mu, params)
    return (
        e_lam
        * scalar_inverse(e_mu, f"Jacobi value at origin for {mu}")
        * by_eval
        * scalar_inverse(den, f"interpolation value at node of {mu}")
    )
