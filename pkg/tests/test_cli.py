"""Command line surface: recipes, subcommands, output formats."""

import json

import pytest

from relcomp.cli import eval_recipe, main, parse_recipe
from relcomp.engine import GradedIdeal, hilbert_function
from relcomp.errors import ParamError
from relcomp.ring import FormStream, RingCtx


# --- recipe language -------------------------------------------------------


def test_parse_round_trip():
    tree = parse_recipe("link(ci(4,4,4,11), general-forms(4,4,4,4,11))")
    assert tree.text() == "link(ci(4,4,4,11),general-forms(4,4,4,4,11))"


def test_parse_rejects_unknown_function():
    with pytest.raises(ParamError):
        parse_recipe("mystery(1,2)")


def test_parse_rejects_trailing_garbage():
    with pytest.raises(ParamError):
        parse_recipe("ci(2,2,2) extra")


def test_eval_general_forms():
    ring = RingCtx(3, 32003)
    ideal = eval_recipe(parse_recipe("general-forms(2,2,2)"), ring,
                        FormStream(ring, 1))
    assert isinstance(ideal, GradedIdeal)
    assert ideal.degrees() == [2, 2, 2]


def test_eval_link_recipe():
    ring = RingCtx(3, 32003)
    res = eval_recipe(parse_recipe("link(ci(3,3,3), general-forms(3,3,3,1,1))"),
                      ring, FormStream(ring, 1))
    assert hilbert_function(res).text() == "1 3 6 7 5 2"


def test_eval_ann_perp_pick():
    ring = RingCtx(3, 32003)
    algebra = eval_recipe(parse_recipe("ann(perp-pick(4, 5, ci(2)))"),
                          ring, FormStream(ring, 1))
    assert hilbert_function(algebra).text() == "1 3 5 7 9 4"


# --- subcommands -----------------------------------------------------------


def test_froberg_command(capsys):
    assert main(["froberg", "-n", "3", "-d", "9,9,9,9,9"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "1 3 6 10 15 21 28 36 45 50 51 48 41 30 15"


def test_froberg_json(capsys):
    assert main(["froberg", "-n", "3", "-d", "3,3,3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["hf"] == [1, 3, 6, 7, 6, 3, 1]


def test_froberg_one_variable(capsys):
    assert main(["froberg", "-n", "1", "-d", "2"]) == 0
    assert capsys.readouterr().out.strip() == "1 1"


def test_predict_aci(capsys):
    assert main(["predict", "aci", "-n", "5", "-d", "2,4,4,4,5,6"]) == 0
    out = capsys.readouterr().out
    assert "R(-14)^45 -> R(-13)^146" in out
    assert "R(-2) + R(-4)^3 + R(-5) + R(-6) -> R" in out


def test_predict_gor_even(capsys):
    assert main(["predict", "gor-even", "-n", "4", "-t", "5",
                 "--ci", "3,3,4"]) == 0
    out = capsys.readouterr().out
    assert ("0 -> R(-14) -> R(-8)^9 + R(-10) + R(-11)^2 -> "
            "R(-6) + R(-7)^20 + R(-8) -> R(-3)^2 + R(-4) + R(-6)^9 -> R"
            in out)


def test_predict_quadric_points(capsys):
    assert main(["predict", "quadric-points", "-N", "30"]) == 0
    out = capsys.readouterr().out
    assert "h-vector: 1 3 5 7 9 5" in out
    assert "0 -> R(-8)^5 -> R(-6)^5 + R(-7)^6 -> R(-2) + R(-5)^6 -> R" in out


def test_predict_error_exit_code(capsys):
    assert main(["predict", "aci", "-n", "3", "-d", "2,2,3,3"]) == 2
    assert "error:" in capsys.readouterr().err


def test_resolve_trivial_ci(capsys):
    assert main(["resolve", "ci(3,3,3)", "-n", "3"]) == 0
    out = capsys.readouterr().out
    assert "hf: 1 3 6 7 6 3 1" in out
    assert "socle: (6)" in out


def test_resolve_json_round_trip(capsys):
    assert main(["resolve", "link(ci(3,3,3), general-forms(3,3,3,1,1))",
                 "-n", "3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["hf"] == [1, 3, 6, 7, 5, 2]
    assert data["socle"] == [5, 5]
    assert all(len(row) == 3 for row in data["betti"])


def test_resolve_witness(tmp_path, capsys):
    path = tmp_path / "w.json"
    assert main(["resolve", "ci(2,2,2)", "-n", "3", "--seed", "7",
                 "--witness", str(path)]) == 0
    capsys.readouterr()
    data = json.loads(path.read_text())
    assert data["n"] == 3 and data["p"] == 32003 and data["seed"] == 7
    assert len(data["generators"]) == 3
    # replay: same seed, same recipe, same generators
    ring = RingCtx(3, 32003)
    ideal = eval_recipe(parse_recipe("ci(2,2,2)"), ring, FormStream(ring, 7))
    assert [g.text() for g in ideal.gens] == data["generators"]


def test_resolve_refuses_infinite_quotient(capsys):
    assert main(["resolve", "general-forms(2,2)", "-n", "3",
                 "--cap", "4"]) == 1
    err = capsys.readouterr().err
    assert "not finite" in err


def test_reproduce_single_case(capsys):
    assert main(["reproduce", "froberg-rows"]) == 0
    assert capsys.readouterr().out.startswith("PASS froberg-rows")


def test_reproduce_unknown_case(capsys):
    assert main(["reproduce", "no-such-case"]) == 2


def test_search_tiny_grid(tmp_path, capsys):
    assert main(["search", "remark-4.10", "--max-degree", "2",
                 "--limit", "4", "--out", str(tmp_path)]) == 0
    captured = capsys.readouterr()
    lines = captured.out.strip().splitlines()
    assert lines[0] == "family,n,p,seed,params,verdict,witness_path"
    assert len(lines) == 3  # the degree-2 grid has two instances
    assert all("remark-4.10" in ln for ln in lines[1:])
    assert all(ln.endswith("CONFIRMED,") or "CONFIRMED" in ln
               for ln in lines[1:])


def test_search_budget_flagged_incomplete(tmp_path, capsys):
    assert main(["search", "remark-4.10", "--max-degree", "3",
                 "--limit", "2", "--out", str(tmp_path)]) == 0
    captured = capsys.readouterr()
    assert "INCOMPLETE" in captured.err


def test_search_empty_grid(tmp_path, capsys):
    assert main(["search", "conj-4.8", "--max-degree", "1",
                 "--limit", "10", "--out", str(tmp_path)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 1  # header only
