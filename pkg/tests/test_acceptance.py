"""Acceptance gate: the eight exact property suites, one line of output each.

Every check is an exact equality over Q or Q(s); there is no tolerance
anywhere.  Each test prints a single PASS/FAIL line with the check count
and elapsed time.
"""

import time

from rootpoly.partitions import enumerate_partitions
from rootpoly.verify import (
    LIMIT_CHECKS,
    limit_check,
    one_row_tableau_weights,
    run_suite,
    special_tableau_weight_is_one,
)


def _report(name, status, checks, started, detail=""):
    elapsed = time.monotonic() - started
    verdict = "PASS" if status == "ok" else "FAIL"
    line = f"{verdict}: {name} ({checks} checks, {elapsed:.1f}s)"
    if detail:
        line += f" {detail}"
    print(line)
    assert status == "ok", line


def test_acceptance_1_vanishing():
    started = time.monotonic()
    r = run_suite("vanishing")
    _report("vanishing", r.status, r.checks, started,
            detail=f"{r.identity} {r.witness}" if r.status != "ok" else "")


def test_acceptance_2_evaluation():
    started = time.monotonic()
    r = run_suite("evaluation")
    _report("evaluation", r.status, r.checks, started,
            detail=f"{r.identity} {r.witness}" if r.status != "ok" else "")


def test_acceptance_3_duality():
    started = time.monotonic()
    r = run_suite("duality")
    _report("duality", r.status, r.checks, started,
            detail=f"{r.identity} {r.witness}" if r.status != "ok" else "")


def test_acceptance_4_binomial():
    started = time.monotonic()
    r = run_suite("binomial")
    _report("binomial", r.status, r.checks, started,
            detail=f"{r.identity} {r.witness}" if r.status != "ok" else "")


def test_acceptance_5_orthogonality():
    started = time.monotonic()
    r = run_suite("orthogonality")
    _report("orthogonality", r.status, r.checks, started,
            detail=f"{r.identity} {r.witness}" if r.status != "ok" else "")


def test_acceptance_6_limits():
    started = time.monotonic()
    checks = 0
    bad = []
    shapes = [lam for lam in enumerate_partitions(3, 2) if lam]
    for limit_id in sorted(LIMIT_CHECKS):
        for lam in shapes:
            r = limit_check(limit_id, lam, 2)
            checks += 1
            if r.status != "ok":
                bad.append((limit_id, lam, r.status, r.identity, r.factor))
    _report("limits", "ok" if not bad else "failed", checks, started,
            detail=str(bad[:3]) if bad else "")


def test_acceptance_7_oracle():
    started = time.monotonic()
    r = run_suite("oracle-n2")
    p = run_suite("prelude")
    status = "ok" if r.status == p.status == "ok" else "failed"
    _report("oracle", status, r.checks + p.checks, started,
            detail="" if status == "ok" else f"{r.identity}{p.identity}")


def test_acceptance_8_anchors():
    started = time.monotonic()
    a = special_tableau_weight_is_one(5, 4)
    b = one_row_tableau_weights(6)
    status = "ok" if a.status == b.status == "ok" else "failed"
    _report("anchors", status, a.checks + b.checks, started,
            detail="" if status == "ok" else f"{a.identity}{b.identity}")
