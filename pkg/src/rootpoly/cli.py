"""Command-line front end.

Four subcommands: ``compute`` expands a polynomial into monomials,
``evaluate`` reports closed-form special values, ``verify`` runs a
named identity suite, and ``limit`` checks one registered limit
identity.  All output is a single canonical JSON document on stdout;
exit codes: 0 ok, 1 identity failure, 2 non-generic parameters,
3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .afamilies import (
    ATypeParams,
    INTERP_JACK,
    INTERP_MACDONALD,
    JACK,
    MACDONALD,
    a_type_evaluation,
    a_type_polynomial,
    interpolation_node_value,
)
from .bcfamilies import (
    BCInterpParams,
    JacobiParams,
    KoornwinderParams,
    bc_interp_evaluation,
    bc_interp_polynomial,
    jacobi_polynomial,
    koornwinder_polynomial,
    orthogonal_bc_evaluation,
)
from .errors import NonGenericParameterError, RootPolyError
from .fieldscalar import RatFunc, format_scalar
from .laurent import LaurentPoly
from .partitions import as_partition
from .twovar import TWO_VAR_IDS, two_var_formula
from .verify import LIMIT_CHECKS, SUITES, limit_check, run_suite

A_TYPE_TAGS = {
    "macdonald": MACDONALD,
    "jack": JACK,
    "interp-macdonald": INTERP_MACDONALD,
    "interp-jack": INTERP_JACK,
}
BC_TAGS = ("bc-interp-macdonald", "bc-interp-jack", "koornwinder", "jacobi")
FAMILY_TAGS = tuple(A_TYPE_TAGS) + BC_TAGS + TWO_VAR_IDS


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_scalar(text: str):
    """A rational "p/q" or the symbolic marker "s"/"s^k", optionally signed."""
    raw = text.strip()
    sign = 1
    if raw.startswith("-"):
        sign = -1
        raw = raw[1:]
    if raw == "s" or raw.startswith("s^"):
        power = 1 if raw == "s" else int(raw[2:])
        return sign * RatFunc.symbol() ** power
    try:
        return sign * Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse scalar literal {text!r}")


SCALAR_FLAGS = ("q", "t", "a", "tau", "alpha", "beta", "a1", "a2", "a3", "a4", "a_dual_1")


def _collect_scalars(args) -> dict:
    out = {}
    symbolic = 0
    for name in SCALAR_FLAGS:
        raw = getattr(args, name, None)
        if raw is None:
            continue
        value = parse_scalar(raw)
        if isinstance(value, RatFunc) and not value.is_constant():
            symbolic += 1
        out[name] = value
    if symbolic > 1:
        raise UsageError("at most one parameter may be symbolic per invocation")
    return out


def _need(scalars: dict, *names):
    missing = [n for n in names if n not in scalars]
    if missing:
        raise UsageError(f"missing required parameter(s): {', '.join(missing)}")
    return [scalars[n] for n in names]


def _build_family(family: str, lam, n: int, scalars: dict):
    if family in ("macdonald", "interp-macdonald"):
        q, t = _need(scalars, "q", "t")
        return a_type_polynomial(A_TYPE_TAGS[family], lam, ATypeParams.q_case(n, q, t))
    if family in ("jack", "interp-jack"):
        (tau,) = _need(scalars, "tau")
        return a_type_polynomial(A_TYPE_TAGS[family], lam, ATypeParams.one_case(n, tau))
    if family == "bc-interp-macdonald":
        q, t, a = _need(scalars, "q", "t", "a")
        return bc_interp_polynomial(lam, BCInterpParams.q_case(n, q, t, a))
    if family == "bc-interp-jack":
        tau, alpha = _need(scalars, "tau", "alpha")
        return bc_interp_polynomial(lam, BCInterpParams.one_case(n, tau, alpha))
    if family == "koornwinder":
        q, t, a1, a2, a3, a4, b1 = _need(
            scalars, "q", "t", "a1", "a2", "a3", "a4", "a_dual_1")
        return koornwinder_polynomial(lam, KoornwinderParams(n, q, t, (a1, a2, a3, a4), b1))
    if family == "jacobi":
        tau, alpha, beta = _need(scalars, "tau", "alpha", "beta")
        return jacobi_polynomial(lam, JacobiParams(n, tau, alpha, beta))
    if family in TWO_VAR_IDS:
        m1 = lam[0] if lam else 0
        m2 = lam[1] if len(lam) > 1 else 0
        params = dict(scalars)
        if "a1" in params and "a" not in params:
            params["a"] = params["a1"]
        if family in ("koorn_93_95",):
            q, t, a1, a2, a3, a4, b1 = _need(
                scalars, "q", "t", "a1", "a2", "a3", "a4", "a_dual_1")
            params = {"q": q, "t": t, "a": (a1, a2, a3, a4), "a_dual_1": b1}
        return two_var_formula(family, m1, m2, params)
    raise UsageError(f"unknown family {family!r}")


def _evaluate_family(family: str, lam, n: int, scalars: dict) -> dict:
    if family in ("macdonald", "jack"):
        if family == "macdonald":
            q, t = _need(scalars, "q", "t")
            params = ATypeParams.q_case(n, q, t)
        else:
            (tau,) = _need(scalars, "tau")
            params = ATypeParams.one_case(n, tau)
        return {"value": a_type_evaluation(A_TYPE_TAGS[family], lam, params)}
    if family in ("interp-macdonald", "interp-jack"):
        if family == "interp-macdonald":
            q, t = _need(scalars, "q", "t")
            params = ATypeParams.q_case(n, q, t)
        else:
            (tau,) = _need(scalars, "tau")
            params = ATypeParams.one_case(n, tau)
        return {"value": interpolation_node_value(lam, params)}
    if family in ("bc-interp-macdonald", "bc-interp-jack"):
        if family == "bc-interp-macdonald":
            q, t, a = _need(scalars, "q", "t", "a")
            params = BCInterpParams.q_case(n, q, t, a)
        else:
            tau, alpha = _need(scalars, "tau", "alpha")
            params = BCInterpParams.one_case(n, tau, alpha)
        return {
            "value": bc_interp_evaluation(lam, params, form="box_product"),
            "factored": bc_interp_evaluation(lam, params, form="factored"),
        }
    if family == "koornwinder":
        q, t, a1, a2, a3, a4, b1 = _need(
            scalars, "q", "t", "a1", "a2", "a3", "a4", "a_dual_1")
        params = KoornwinderParams(n, q, t, (a1, a2, a3, a4), b1)
        return {"value": orthogonal_bc_evaluation("koornwinder", lam, params)}
    if family == "jacobi":
        tau, alpha, beta = _need(scalars, "tau", "alpha", "beta")
        params = JacobiParams(n, tau, alpha, beta)
        return {"value": orthogonal_bc_evaluation("jacobi", lam, params)}
    raise UsageError(f"no closed-form evaluation for family {family!r}")


def _poly_document(p: LaurentPoly) -> list:
    return [[list(exps), format_scalar(c)] for exps, c in p.sorted_terms()]


def _echo(args, scalars: dict) -> dict:
    echo = {"subcommand": args.subcommand}
    for key in ("family", "partition", "n", "suite", "id"):
        value = getattr(args, key, None)
        if value is not None:
            echo[key] = value
    if getattr(args, "bounds", None):
        echo["bounds"] = args.bounds
    if scalars:
        echo["params"] = {k: format_scalar(v) for k, v in sorted(scalars.items())}
    return echo


def _emit(document: dict) -> int:
    sys.stdout.write(json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n")
    status = document["status"]
    return {"ok": 0, "failed": 1, "nongeneric": 2}[status]


def cmd_compute(args) -> int:
    scalars = _collect_scalars(args)
    lam = as_partition(args.partition or [])
    poly = _build_family(args.family, lam, args.n, scalars)
    doc = _echo(args, scalars)
    doc["status"] = "ok"
    doc["result"] = _poly_document(poly)
    return _emit(doc)


def cmd_evaluate(args) -> int:
    scalars = _collect_scalars(args)
    lam = as_partition(args.partition or [])
    values = _evaluate_family(args.family, lam, args.n, scalars)
    doc = _echo(args, scalars)
    doc["status"] = "ok"
    doc["scalars"] = {k: format_scalar(v) for k, v in sorted(values.items())}
    return _emit(doc)


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    bounds = args.bounds or []
    max_weight = bounds[0] if bounds else None
    n = bounds[1] if len(bounds) > 1 else None
    result = run_suite(args.suite, max_weight, n)
    doc = _echo(args, {})
    doc["status"] = result.status
    doc["checks"] = result.checks
    if result.identity:
        doc["identity"] = result.identity
    if result.witness:
        doc["witness"] = result.witness
    if result.factor:
        doc["factor"] = result.factor
    return _emit(doc)


def cmd_limit(args) -> int:
    if args.id not in LIMIT_CHECKS:
        raise UsageError(f"unknown limit id {args.id!r}")
    opts = {}
    if args.tau is not None:
        opts["tau"] = int(args.tau)
    if args.alpha is not None:
        opts["alpha"] = int(args.alpha)
    lam = as_partition(args.partition or [])
    result = limit_check(args.id, lam, args.n, **opts)
    doc = _echo(args, {})
    doc["status"] = result.status
    if result.identity:
        doc["identity"] = result.identity
    if result.witness:
        doc["witness"] = result.witness
    if result.factor:
        doc["factor"] = result.factor
    return _emit(doc)


def build_parser() -> _Parser:
    parser = _Parser(prog="rootpoly")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, with_family=True):
        if with_family:
            p.add_argument("--family", required=True, choices=sorted(FAMILY_TAGS))
        p.add_argument("--partition", type=int, nargs="*", default=[])
        p.add_argument("--n", type=int, default=2)
        for name in SCALAR_FLAGS:
            p.add_argument(f"--{name.replace('_', '-')}", dest=name)

    p = sub.add_parser("compute")
    add_common(p)
    p.set_defaults(handler=cmd_compute)

    p = sub.add_parser("evaluate")
    add_common(p)
    p.set_defaults(handler=cmd_evaluate)

    p = sub.add_parser("verify")
    p.add_argument("--suite", required=True)
    p.add_argument("--bounds", type=int, nargs="*", default=None)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("limit")
    p.add_argument("--id", required=True)
    add_common(p, with_family=False)
    p.set_defaults(handler=cmd_limit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except UsageError as e:
        sys.stderr.write(f"usage error: {e}\n")
        return 3
    except NonGenericParameterError as e:
        sys.stdout.write(json.dumps(
            {"status": "nongeneric", "factor": e.factor},
            sort_keys=True, separators=(",", ":")) + "\n")
        return 2
    except (RootPolyError, ValueError) as e:
        sys.stderr.write(f"usage error: {e}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
