from fractions import Fraction
from itertools import permutations

import pytest

from rootpoly.bcfamilies import (
    BCInterpParams,
    JacobiParams,
    KoornwinderParams,
    bc_interp_evaluation,
    bc_interp_polynomial,
    bc_interp_reduction,
    dual_parameters,
    jacobi_evaluation,
    jacobi_expansion_coefficient,
    jacobi_polynomial,
    koornwinder_evaluation,
    koornwinder_polynomial,
    spectral_point_bc,
)
from rootpoly.partitions import contains, enumerate_partitions

Q0, T0, A0 = Fraction(1, 2), Fraction(1, 3), Fraction(2, 5)
BQ = BCInterpParams.q_case(2, Q0, T0, A0)
B1 = BCInterpParams.one_case(2, 2, Fraction(2, 7))

KOORN = KoornwinderParams(
    n=2, q=Q0, t=T0,
    a=(Fraction(2, 3), Fraction(3, 5), Fraction(5, 7), Fraction(7, 16)),
    a_dual_1=Fraction(1, 2),
)
JAC = JacobiParams(n=2, tau=2, alpha=Fraction(1, 3), beta=Fraction(1, 5))


def is_bc_symmetric(p):
    """Invariant under permuting variables and inverting any of them."""
    n = p.nvars
    if p != p.invert_variables():
        # full hyperoctahedral check below catches partial inversions too
        return False
    for perm in permutations(range(n)):
        for signs in [(1, 1), (1, -1), (-1, 1), (-1, -1)][: 2 ** n]:
            for exps, c in p.terms.items():
                img = tuple(signs[i] * exps[perm[i]] for i in range(n))
                if p.coefficient(img) != c:
                    return False
    return True


def test_bc_interp_frozen_expansion():
    p = bc_interp_polynomial((1,), BQ)
    assert p.coefficient((1, 0)) == 1
    assert p.coefficient((-1, 0)) == 1
    assert p.coefficient((0, 0)) == Fraction(-158, 15)
    assert len(p.terms) == 5
    p1 = bc_interp_polynomial((1,), B1)
    assert p1.coefficient((2, 0)) == 1
    # nodes tau*(n-k) + alpha for entries k = 1, 2
    assert p1.coefficient((0, 0)) == -(2 + Fraction(2, 7)) ** 2 - Fraction(2, 7) ** 2


def test_bc_interp_vanishing_small():
    lam = (2,)
    p = bc_interp_polynomial(lam, BQ)
    for mu in enumerate_partitions(3, 2):
        if not contains(lam, mu):
            assert p.evaluate(spectral_point_bc(mu, BQ)) == 0
    assert p.evaluate(spectral_point_bc(lam, BQ)) != 0


def test_bc_interp_extra_vanishing_one_case():
    # the one-case polynomial also vanishes at sign-flipped nodes
    p = bc_interp_polynomial((2,), B1)
    x = spectral_point_bc((1,), B1)
    assert p.evaluate((-x[0], x[1])) == 0


def test_bc_interp_evaluation_forms_agree():
    for lam in enumerate_partitions(4, 2):
        vq = bc_interp_evaluation(lam, BQ, form="box_product")
        assert vq == bc_interp_evaluation(lam, BQ, form="factored")
        assert vq == bc_interp_polynomial(lam, BQ).evaluate(spectral_point_bc(lam, BQ))
        v1 = bc_interp_evaluation(lam, B1, form="box_product")
        assert v1 == bc_interp_evaluation(lam, B1, form="factored")
        assert v1 == bc_interp_polynomial(lam, B1).evaluate(spectral_point_bc(lam, B1))


def test_bc_interp_evaluation_frozen():
    assert bc_interp_evaluation((2, 1), BQ) == Fraction(4203089, 4500)


def test_bc_interp_reduction_identity():
    for lam in [(1, 1), (2, 1), (2, 2)]:
        for params in (BQ, B1):
            pref, reduced, shifted = bc_interp_reduction(lam, params)
            lhs = bc_interp_polynomial(lam, params)
            rhs = pref * bc_interp_polynomial(reduced, shifted)
            assert lhs == rhs
    with pytest.raises(ValueError):
        bc_interp_reduction((2,), BQ)


def test_koornwinder_params_validation():
    with pytest.raises(ValueError):
        KoornwinderParams(2, Q0, T0, (1, 1, 1, 1), Fraction(1, 3))
    with pytest.raises(ValueError):
        KoornwinderParams(2, Q0, T0, (1, 1, 1), Fraction(1))


def test_dual_parameters_roundtrip():
    dual = KOORN.dual()
    assert dual.a == dual_parameters(KOORN.a, Q0, KOORN.a_dual_1)
    assert dual.a_dual_1 == KOORN.a[0]
    # dualizing twice restores the original parameter tuple
    assert dual.dual().a == KOORN.a


def test_koornwinder_polynomial_shape():
    p = koornwinder_polynomial((1, 1), KOORN)
    assert is_bc_symmetric(p)
    assert p.coefficient((1, 1)) == 1
    # value at the principal point matches the closed product
    n, t, a1 = 2, T0, KOORN.a[0]
    point = (t * a1, a1)
    assert p.evaluate(point) == koornwinder_evaluation((1, 1), KOORN)


def test_koornwinder_evaluation_frozen():
    assert koornwinder_evaluation((1, 1), KOORN) == Fraction(1674959, 1420020)


def test_jacobi_polynomial_shape():
    p = jacobi_polynomial((2,), JAC)
    full = (2, 0)
    assert p.coefficient(full) == 1
    # symmetric in the ordinary (type A) sense
    for exps, c in p.terms.items():
        assert p.coefficient((exps[1], exps[0])) == c
    assert p.evaluate((Fraction(0), Fraction(0))) == jacobi_evaluation((2,), JAC)


def test_jacobi_evaluation_frozen():
    assert jacobi_evaluation((1, 1), JAC) == Fraction(125, 323)
    assert jacobi_evaluation((), JAC) == 1


def test_jacobi_expansion_coefficient_diagonal():
    assert jacobi_expansion_coefficient((2, 1), (2, 1), JAC) == 1
    with pytest.raises(ValueError):
        jacobi_expansion_coefficient((1,), (2,), JAC)


def test_alpha_prime():
    assert JAC.alpha_prime == (JAC.alpha + JAC.beta + 1) / 2
