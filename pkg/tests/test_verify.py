from fractions import Fraction

import pytest

from rootpoly.afamilies import ATypeParams, JACK, MACDONALD, a_type_polynomial
from rootpoly.moments import MomentFunctionalSpec
from rootpoly.verify import (
    LIMIT_CHECKS,
    SUITES,
    gram_schmidt_polynomial,
    limit_check,
    one_row_tableau_weights,
    run_suite,
    special_tableau_weight_is_one,
)


def test_suite_names_are_registered():
    assert set(SUITES) == {
        "vanishing", "evaluation", "duality", "binomial",
        "orthogonality", "reduction", "oracle-n2", "prelude",
    }
    with pytest.raises(ValueError):
        run_suite("nope")


def test_prelude_suite_small():
    result = run_suite("prelude")
    assert result.status == "ok"
    assert result.checks > 0


def test_reduced_bounds_are_respected():
    small = run_suite("vanishing", 2, 2)
    full_default_would_be_larger = small.checks
    assert small.status == "ok"
    assert 0 < full_default_would_be_larger < 1092


def test_gram_schmidt_matches_constructions():
    # the moment-functional Gram-Schmidt oracle reproduces the tableau sums
    q = Fraction(1, 3)
    spec = MomentFunctionalSpec(kind="constant_term")
    for lam in [(1,), (2,), (1, 1), (2, 1)]:
        gs = gram_schmidt_polynomial(lam, spec, 2, weight_params=("macdonald", q, q * q))
        assert gs == a_type_polynomial(MACDONALD, lam, ATypeParams.q_case(2, q, q * q))
        gs = gram_schmidt_polynomial(lam, spec, 2, weight_params=("jack", 2))
        assert gs == a_type_polynomial(JACK, lam, ATypeParams.one_case(2, 2))


def test_limit_check_ids():
    assert len(LIMIT_CHECKS) == 18
    result = limit_check("eq20", (2, 1), 2)
    assert result.status == "ok"
    with pytest.raises(ValueError):
        limit_check("eq999", (1,), 2)


def test_anchor_runners():
    assert special_tableau_weight_is_one(4, 3).status == "ok"
    assert one_row_tableau_weights(4).status == "ok"
