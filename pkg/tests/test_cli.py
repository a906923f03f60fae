import json
from fractions import Fraction

import pytest

from rootpoly.cli import main, parse_scalar
from rootpoly.fieldscalar import RatFunc


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_scalar():
    assert parse_scalar("3/4") == Fraction(3, 4)
    assert parse_scalar("-2") == Fraction(-2)
    assert parse_scalar("s") == RatFunc.symbol()
    assert parse_scalar("s^3") == RatFunc.symbol() ** 3
    assert parse_scalar("-s") == -RatFunc.symbol()
    from rootpoly.cli import UsageError

    with pytest.raises(UsageError):
        parse_scalar("x")


def test_compute_macdonald(capsys):
    code, out = run(capsys, "compute", "--family", "macdonald",
                    "--partition", "1", "--n", "2", "--q", "1/2", "--t", "1/3")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "ok"
    assert doc["result"] == [[[0, 1], "1"], [[1, 0], "1"]]


def test_compute_interp_macdonald(capsys):
    code, out = run(capsys, "compute", "--family", "interp-macdonald",
                    "--partition", "1", "--n", "2", "--q", "1/2", "--t", "1/3")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"] == [[[0, 0], "-4/3"], [[0, 1], "1"], [[1, 0], "1"]]


def test_compute_bc_interp_jack(capsys):
    code, out = run(capsys, "compute", "--family", "bc-interp-jack",
                    "--partition", "1", "--n", "2", "--tau", "2", "--alpha", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"] == [[[0, 0], "-34"], [[0, 2], "1"], [[2, 0], "1"]]


def test_output_is_byte_identical(capsys):
    args = ("compute", "--family", "jack", "--partition", "2", "1",
            "--n", "2", "--tau", "5/3")
    _, first = run(capsys, *args)
    _, second = run(capsys, *args)
    assert first == second
    json.loads(first)  # round-trips


def test_compute_symbolic_parameter(capsys):
    code, out = run(capsys, "compute", "--family", "macdonald",
                    "--partition", "1", "--n", "2", "--q", "s", "--t", "1/3")
    assert code == 0
    assert json.loads(out)["params"]["q"] == "(s)"


def test_two_symbolic_parameters_rejected(capsys):
    code, _ = run(capsys, "compute", "--family", "macdonald",
                  "--partition", "1", "--n", "2", "--q", "s", "--t", "s")
    assert code == 3


def test_missing_parameter_rejected(capsys):
    code, _ = run(capsys, "compute", "--family", "macdonald",
                  "--partition", "1", "--n", "2", "--q", "1/2")
    assert code == 3


def test_unknown_family_rejected(capsys):
    code, _ = run(capsys, "compute", "--family", "nope", "--partition", "1")
    assert code == 3


def test_nongeneric_exit_code(capsys):
    code, out = run(capsys, "compute", "--family", "macdonald",
                    "--partition", "2", "--n", "2", "--q", "1", "--t", "1")
    assert code == 2
    doc = json.loads(out)
    assert doc["status"] == "nongeneric"
    assert doc["factor"]


def test_evaluate_koornwinder(capsys):
    code, out = run(capsys, "evaluate", "--family", "koornwinder",
                    "--partition", "1", "1", "--n", "2", "--q", "1/2", "--t", "1/3",
                    "--a1", "2/3", "--a2", "3/5", "--a3", "5/7", "--a4", "7/16",
                    "--a-dual-1", "1/2")
    assert code == 0
    assert json.loads(out)["scalars"]["value"] == "1674959/1420020"


def test_evaluate_bc_interp_both_forms(capsys):
    code, out = run(capsys, "evaluate", "--family", "bc-interp-macdonald",
                    "--partition", "2", "1", "--n", "2",
                    "--q", "1/2", "--t", "1/3", "--a", "2/5")
    assert code == 0
    scalars = json.loads(out)["scalars"]
    assert scalars["value"] == scalars["factored"] == "4203089/4500"


def test_verify_prelude_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "prelude")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "ok"
    assert doc["checks"] > 0


def test_verify_unknown_suite(capsys):
    code, _ = run(capsys, "verify", "--suite", "nope")
    assert code == 3


def test_limit_subcommand(capsys):
    code, out = run(capsys, "limit", "--id", "eq22",
                    "--partition", "1", "--n", "2", "--tau", "2")
    assert code == 0
    assert json.loads(out)["status"] == "ok"


def test_limit_unknown_id(capsys):
    code, _ = run(capsys, "limit", "--id", "eq999", "--partition", "1")
    assert code == 3


def test_compute_two_var_oracle(capsys):
    code, out = run(capsys, "compute", "--family", "mac_90_92",
                    "--partition", "2", "1", "--q", "1/2", "--t", "1/3")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"] == [[[1, 2], "1"], [[2, 1], "1"]]
