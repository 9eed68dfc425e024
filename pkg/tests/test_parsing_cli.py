"""Expression grammar round trips and the command-line interface."""

import json
import random
from fractions import Fraction

import pytest

from laytrop import (COUNTING, RATIONALS, INF, LayeredSemiring, ParseError,
                     parse_point, parse_polynomial, parse_puiseux,
                     parse_puiseux_polynomial, parse_scalar)
from laytrop.cli import main

from oracles import random_poly, random_series

NAT = LayeredSemiring(COUNTING, RATIONALS)


# ---------------------------------------------------------------------------
# Grammar


def test_scalar_literals():
    assert parse_scalar("4", NAT) == NAT.scalar(4)
    assert parse_scalar("-3/4", NAT) == NAT.scalar(Fraction(-3, 4))
    assert parse_scalar("(2|4)", NAT) == NAT.scalar(4, 2)
    assert parse_scalar("(inf|1/2)", NAT) == NAT.scalar(Fraction(1, 2), INF)
    assert parse_scalar("(-5)", NAT) == NAT.scalar(-5)


def test_point_parsing():
    point = parse_point("0,(2|4),-1/3", NAT)
    assert point == (NAT.scalar(0), NAT.scalar(4, 2), NAT.scalar(Fraction(-1, 3)))


def test_polynomial_parsing():
    f = parse_polynomial("x1^2 + 3*x1 + 4", NAT)
    assert f.nvars == 1
    assert f.coeffs == {(2,): NAT.scalar(0), (1,): NAT.scalar(3), (0,): NAT.scalar(4)}
    g = parse_polynomial("(2|4)*x1", NAT)
    assert g.coeffs == {(1,): NAT.scalar(4, 2)}


def test_duplicate_monomials_merge():
    f = parse_polynomial("x1 + x1", NAT)
    assert f.coeffs == {(1,): NAT.scalar(0, 2)}


def test_multivariate_and_declared_arity():
    f = parse_polynomial("x1*x2^2 + 0", NAT)
    assert f.support() == ((0, 0), (1, 2))
    g = parse_polynomial("x1 + 0", NAT, nvars=3)
    assert g.nvars == 3
    with pytest.raises(ParseError):
        parse_polynomial("x5", NAT, nvars=2)


def test_laurent_exponents_need_the_flag():
    f = parse_polynomial("x1^-2 + 0", NAT, laurent=True)
    assert f.support() == ((-2,), (0,))
    with pytest.raises(ParseError):
        parse_polynomial("x1^-2", NAT)


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x1 + @", NAT)
    assert err.value.column == 6
    with pytest.raises(ParseError):
        parse_polynomial("", NAT)
    with pytest.raises(ParseError):
        parse_scalar("(2|)", NAT)


def test_puiseux_parsing():
    p = parse_puiseux("3*t^(-1/2) + 2*t^(0)")
    assert p.terms == ((Fraction(-1, 2), Fraction(3)), (Fraction(0), Fraction(2)))
    assert parse_puiseux("t^(0) + (-1)*t^(0)").is_zero
    assert parse_puiseux("t").val() == -1
    assert parse_puiseux("5").leading() == 5


def test_puiseux_polynomial_parsing():
    f = parse_puiseux_polynomial("L^2 + (-1)*t^(-1)*L")
    assert f.degree() == 2
    assert f.coefficient(1).terms == ((Fraction(-1), Fraction(-1)),)
    assert str(parse_puiseux_polynomial("L + 2")) == "L + 2"


def test_polynomial_print_parse_roundtrip():
    rng = random.Random(41)
    for _ in range(150):
        f = random_poly(rng, NAT, rng.randint(1, 3))
        assert parse_polynomial(str(f), NAT, nvars=f.nvars) == f


def test_puiseux_print_parse_roundtrip():
    rng = random.Random(42)
    for _ in range(150):
        p = random_series(rng)
        assert parse_puiseux(str(p)) == p


def test_puiseux_polynomial_print_parse_roundtrip():
    from laytrop import PuiseuxPolynomial
    rng = random.Random(43)
    for _ in range(60):
        f = PuiseuxPolynomial.from_coeffs(
            {d: random_series(rng) for d in range(rng.randint(1, 4))})
        if f.is_zero:
            continue
        assert parse_puiseux_polynomial(str(f)) == f


def test_scalar_print_parse_roundtrip():
    for scalar in (NAT.scalar(3), NAT.scalar(Fraction(-7, 2), 4), NAT.scalar(0, INF)):
        assert parse_scalar(str(scalar), NAT) == scalar


# ---------------------------------------------------------------------------
# CLI


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_eval(capsys):
    code, out, _ = run_cli(capsys, "eval", "x1 + 2", "--point", "(2|4)")
    assert code == 0
    assert json.loads(out) == {"scalar": "(2|4)", "layer": "2", "value": "4"}


def test_cli_roots(capsys):
    code, out, _ = run_cli(capsys, "roots", "x1^2 + 3*x1 + 4")
    assert code == 0
    assert json.loads(out) == [{"root": "1", "mult": 1}, {"root": "3", "mult": 1}]


def test_cli_roots_csv(capsys):
    code, out, _ = run_cli(capsys, "roots", "--format", "csv", "x1^2 + 3*x1 + 4")
    assert code == 0
    assert out.splitlines() == ["root,mult", "1,1", "3,1"]


def test_cli_layering(capsys):
    code, out, _ = run_cli(capsys, "layering", "--L", "nat", "x1 + x2 + 0",
                           "--point", "0,0")
    assert code == 0
    assert json.loads(out) == {"layer": 3}


def test_cli_layering_of_family(capsys):
    code, out, _ = run_cli(capsys, "layering", "x1 + 2", "x1 + 3",
                           "--point", "(2|4)")
    assert code == 0
    assert json.loads(out) == {"layer": 2}


def test_cli_trop(capsys):
    code, out, _ = run_cli(capsys, "trop", "L^2 + (-1)*t^(-1)*L + (-2)*L + 2*t^(-1)")
    assert code == 0
    payload = json.loads(out)
    # tangible coefficients print with the layer-1 shorthand
    assert payload["coefficients"] == {"0": "1", "1": "1", "2": "0"}


def test_cli_explode(capsys):
    code, out, _ = run_cli(capsys, "explode", "L + (-1)*t^(-1)")
    assert code == 0
    assert json.loads(out)["coefficients"] == {
        "0": {"sort": "-1", "value": "1"},
        "1": {"sort": "1", "value": "0"},
    }


def test_cli_locus(capsys):
    code, out, _ = run_cli(capsys, "locus", "x1 + x2 + 0", "--grid=-1:1:1")
    assert code == 0
    records = json.loads(out)
    assert {"point": ["0", "0"], "layers": ["1", "1"], "layering": "3"} in records
    got = {tuple(r["point"]) for r in records}
    assert got == {("0", "0"), ("1", "1"), ("0", "-1"), ("-1", "0")}


def test_cli_locus_csv_and_determinism(capsys):
    code, first, _ = run_cli(capsys, "locus", "x1 + x2 + 0", "--grid=-1:1:1",
                             "--format", "csv")
    assert code == 0
    assert first.splitlines()[0] == "point,layers,layering"
    code, second, _ = run_cli(capsys, "locus", "x1 + x2 + 0", "--grid=-1:1:1",
                              "--format", "csv")
    assert first == second


def test_cli_combined_locus(capsys):
    code, out, _ = run_cli(capsys, "locus", "x1 + 2", "--grid=3:5:1",
                           "--grid-layer", "2", "--combined")
    assert code == 0
    assert len(json.loads(out)) == 3


def test_cli_essential(capsys):
    code, out, _ = run_cli(capsys, "essential", "x1^2 + 0*x1 + 4")
    assert code == 0
    assert json.loads(out) == {"essential": [[0], [2]], "exact": True}


def test_cli_kapranov(capsys):
    code, out, _ = run_cli(capsys, "kapranov", "--degree", "3", "--trials", "25",
                           "--seed", "7")
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True and payload["trials"] == 25


def test_cli_congruence(tmp_path, capsys):
    spec = {
        "pairs": [["x1^2 + 0*x1 + 4", "x1^2 + 4"]],
        "points": [["0"], ["1"], ["-2"]],
        "grid": "-3:3:1",
    }
    path = tmp_path / "congruence.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run_cli(capsys, "congruence", str(path))
    assert code == 0
    payload = json.loads(out)
    assert payload["points_congruent"] == [True]
    assert payload["roundtrip"]["pass"] is True


def test_cli_domain_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "eval", "x1 + @", "--point", "0")
    assert code == 1 and "error" in err


def test_cli_usage_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "locus", "x1 + 0", "--grid=nonsense")
    assert code == 2 and "usage" in err


def test_cli_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["roots", "--frobnicate", "x1"])
    assert excinfo.value.code == 2
