import json
from fractions import Fraction
import subprocess
import sys

import pytest
from hypothesis import given

from corpus import expressions, fixed_corpus
from ramond_cas.cli import grammar as g
from ramond_cas.cli import main as cli_main
from ramond_cas.cli import suites
from ramond_cas.cli.evaluate import EvalError, eval_expr, evaluate_to_text, parse_context
from ramond_cas.cli.grammar import ParseError, parse, render
from ramond_cas.records import Verification


# -- grammar ---------------------------------------------------------------------

def test_parse_tree_shape():
    tree = parse("L(1)*L(-1) - 2*L(0)")
    assert tree == g.Sub(g.Mul(g.Gen("L", 1), g.Gen("L", -1)), g.Mul(g.Num(2), g.Gen("L", 0)))
    assert parse("[G(1),G(-1)]") == g.Bracket(g.Gen("G", 1), g.Gen("G", -1))
    assert parse(" 1 / 2 * C ") == g.Mul(g.Num(Fraction(1, 2)), g.Gen("C"))
    assert parse("L(1) - L(2) - L(3)") == \
        g.Sub(g.Sub(g.Gen("L", 1), g.Gen("L", 2)), g.Gen("L", 3))


@pytest.mark.parametrize("text,position,fragment", [
    ("X(0)", 2, "nonzero"),
    ("Y(-0)", 2, "nonzero"),
    ("L(1/2)", 3, "integer"),
    ("L(1", 3, "')'"),
    ("foo(1)", 0, "unknown symbol"),
    ("[L(1) L(2)]", 6, "','"),
    ("L(1) $", 5, "unexpected character"),
    ("e(0,2)", 4, "0 or 1"),
    ("1/0", 2, "positive"),
    ("L(1) L(2)", 5, "unexpected"),
])
def test_syntax_errors_carry_positions(text, position, fragment):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == position
    assert fragment in str(info.value)


@given(expressions)
def test_round_trip_property(tree):
    text = render(tree)
    assert parse(text) == tree
    assert render(parse(text)) == text


def test_round_trip_fixed_corpus():
    corpus = fixed_corpus()
    assert len(corpus) == 200
    for tree in corpus:
        assert parse(render(tree)) == tree


# -- evaluation ------------------------------------------------------------------

def test_eval_examples():
    assert evaluate_to_text("[L(2),L(-2)]", "s") == "-4*L(0) + 1/2*C"
    assert evaluate_to_text("G(0)*G(0)", "ubar") == "-L(0)"
    assert evaluate_to_text("L(3)", "module", "e(0,1)") == "(lambda + 3*b + 3/2)*e(3,1)"
    assert evaluate_to_text("L(3)*e(0,1)", "module(lambda,b)") == "(lambda + 3*b + 3/2)*e(3,1)"


def test_eval_contexts():
    assert evaluate_to_text("L(1)*L(-1)*v", "verma(h,c)") == "-2*h*v"
    assert evaluate_to_text("G(0)^2*v", "verma(2,24)") == "-3*v"
    assert evaluate_to_text("d_t*xi*t(2)", "weyl(1/2)", "e(0,0)") == "5/2*e(1,1)"
    assert evaluate_to_text("t(2)*t(-2) - 1", "ubar") == "0"
    assert evaluate_to_text("[X(1),X(2)] - X(1) + 2*X(2) - X(3)", "ubar") == "0"
    assert evaluate_to_text("lambda*b - b*lambda", "s") == "0"
    assert evaluate_to_text("(L(1) + 2)*e(0,0)", "module(1,0)") == "2*e(0,0) + e(1,0)"


def test_context_mismatches():
    for expr, ctx in [("d_t", "s"), ("X(1)", "s"), ("t(1)", "sbar"), ("xi", "s"),
                      ("e(0,0)", "s"), ("v", "module"), ("L(1)", "weyl"), ("e(0,0)*L(1)", "module"),
                      ("[e(0,0),L(1)]", "module"), ("e(0,0) + L(1)", "module")]:
        with pytest.raises(EvalError):
            eval_expr(expr, ctx)
    with pytest.raises(EvalError):
        parse_context("module(1)")
    with pytest.raises(EvalError):
        parse_context("lattice")


def test_parse_of_rendered_results_reproduces_them():
    for expr, ctx in [("[G(2),G(-2)]", "s"), ("L(2)*L(-3)*G(1)", "sbar"), ("X(2)*Y(-1)", "ubar"),
                      ("[L(1),t(3)] + 1/2*xit(-1)", "stilde")]:
        out = evaluate_to_text(expr, ctx)
        assert evaluate_to_text(out, ctx) == out


# -- suites and the command line -------------------------------------------------

@pytest.mark.parametrize("name,bound", [("twist", 4), ("iota", 4), ("identity", 2), ("verma", 3),
                                        ("subalg", 2), ("jacobi", 2), ("omega", 2), ("gamma", 2),
                                        ("cover", 1)])
def test_suites_pass(name, bound):
    report = suites.run_suite(name, bound)
    assert report.passed, [c.as_dict() for c in report.failures]
    assert report.checks


def test_identity_suite_reports_upper_limit():
    report = suites.run_suite("identity", 2)
    assert report.as_dict()["meta"]["upper_limit"] == "m+2"
    assert len(report.checks) == 9


def test_unknown_suite():
    with pytest.raises(ValueError):
        suites.run_suite("nope", 2)
    with pytest.raises(ValueError):
        suites.run_suite("twist", 0)


def run_cli(*args, capsys):
    code = cli_main.main(list(args))
    return code, capsys.readouterr().out


def test_json_is_deterministic(capsys):
    c1, out1 = run_cli("verify", "--suite", "twist", "--bound", "2", capsys=capsys)
    c2, out2 = run_cli("verify", "--suite", "twist", "--bound", "2", capsys=capsys)
    assert c1 == c2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["schema"] == "ramond-cas/1"
    assert "timing_seconds" not in doc
    c3, out3 = run_cli("verify", "--suite", "twist", "--bound", "2", "--timing", capsys=capsys)
    assert "timing_seconds" in json.loads(out3)


def test_exit_code_contract(capsys, monkeypatch):
    assert run_cli("verify", "--suite", "iota", "--bound", "2", capsys=capsys)[0] == 0

    def failing(bound):
        yield Verification("planted", {}, True)
        yield Verification("planted/fail", {}, False, "1")

    monkeypatch.setitem(suites._RUNNERS, "iota", failing)
    code, out = run_cli("verify", "--suite", "iota", "--bound", "2", capsys=capsys)
    assert code == 1
    doc = json.loads(out)
    assert doc["summary"] == {"total": 2, "passed": 1, "failed": 1}
    assert doc["checks"][1]["residue"] == "1"


def test_parse_errors_exit_2(capsys):
    code, out = run_cli("act", "--expr", "X(0)", "--context", "ubar", capsys=capsys)
    assert code == 2
    assert json.loads(out)["position"] == 2


def test_subcommands(capsys, tmp_path):
    code, out = run_cli("simplicity", "--lambda", "0", "--b", "0", "--window=-6..6", "--depth", "2",
                        capsys=capsys)
    assert code == 0 and json.loads(out)["proper_submodules"][0]["dim"] == 1
    code, out = run_cli("simplicity", "--lambda", "0", "--b-grid", "0,1/2", "--window=-5..5", capsys=capsys)
    assert [r["exceptional"] for r in json.loads(out)["sweep"]][0] is True
    code, out = run_cli("omega", "--variant", "GL", "--find-min-m", "--max-m", "4", capsys=capsys)
    assert code == 0 and json.loads(out)["minimal_m"] == 3
    code, out = run_cli("omega", "--variant", "LL", "--max-m", "1", capsys=capsys)
    assert code == 1 and json.loads(out)["minimal_m"] is None
    code, out = run_cli("verma", "--h", "1/2", "--c", "3/2", "--depth", "3", capsys=capsys)
    assert json.loads(out)["dims"] == [2, 4, 8, 16]
    assert json.loads(out)["l0_eigenvalues"][3] == "-5/2"
    target = tmp_path / "cover.json"
    code, out = run_cli("cover", "--lambda", "1/2", "--b", "1/3", "--offset", "1", "--truncation", "2",
                        "--out", str(target), capsys=capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["stabilized"] is True


def test_parallel_all_matches_serial(monkeypatch):
    monkeypatch.setattr(suites, "SUITES", ("iota", "identity", "twist"))
    serial = suites.run_suite("all", 1).as_dict()
    monkeypatch.setenv("RAMOND_CAS_THREADS", "2")
    parallel = suites.run_suite("all", 1).as_dict()
    assert serial == parallel
    assert serial["summary"]["failed"] == 0


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "ramond_cas", "act", "--expr", "[G(1),G(-1)]"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["result"] == "-2*L(0) + 1/4*C"
