from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from hypergames import GameGraph, catalog, hyperbisimilar, parse, serialize
from hypergames.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args, **kwargs):
    return runner.invoke(main, list(args), catch_exceptions=False, **kwargs)


def test_analyze_json_zero(runner):
    result = invoke(runner, "analyze", "--json", "zero")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["profile"] == [True, False, True, False]
    assert payload["sector"] == "WinII"


def test_analyze_text_catalog_games(runner):
    assert "NL_All" in invoke(runner, "analyze", "c").output
    assert "WinL" in invoke(runner, "analyze", "one").output


def test_analyze_minimize_flag(runner):
    result = invoke(runner, "analyze", "--json", "--minimize", "traffic_jam")
    assert json.loads(result.output)["quotientPositions"] == 8


def test_analyze_reads_files(runner, tmp_path):
    path = tmp_path / "game.hyg"
    path.write_text(serialize(catalog("star2")))
    result = invoke(runner, "analyze", "--json", str(path))
    assert json.loads(result.output)["sector"] == "WinI"


def test_exit_code_parse_error(runner, tmp_path):
    path = tmp_path / "broken.hyg"
    path.write_text("{not json")
    result = invoke(runner, "analyze", str(path))
    assert result.exit_code == 2
    assert "error:" in result.output


def test_exit_code_unknown_name(runner):
    assert invoke(runner, "analyze", "no_such_game").exit_code == 2


def test_exit_code_invalid_graph(runner, tmp_path):
    path = tmp_path / "invalid.hyg"
    path.write_text('{"hyg":1,"root":"x","positions":{"x":{"moves":["gone"]}}}')
    assert invoke(runner, "analyze", str(path)).exit_code == 3


def test_grundy_traffic_jam_table(runner):
    result = invoke(runner, "grundy", "--json", "traffic_jam")
    payload = json.loads(result.output)
    assert payload["values"]["L"] == "3"
    assert payload["values"]["I"] == "inf{1,2}"
    assert payload["values"]["M"] == "inf{2,3}"
    assert payload["root"] == "inf{2,3}"
    assert payload["outcome"] == "Draw"


def test_grundy_star5_and_c(runner):
    assert json.loads(invoke(runner, "grundy", "--json", "star5").output)["root"] == "5"
    payload = json.loads(invoke(runner, "grundy", "--json", "c").output)
    assert payload["root"] == "inf"
    assert payload["outcome"] == "Draw"


def test_grundy_rejects_partizan(runner):
    assert invoke(runner, "grundy", "one").exit_code == 4


def test_sum_neg_minimize_commands(runner, tmp_path):
    out = tmp_path / "out.hyg"
    invoke(runner, "sum", "zero", "star2", "-o", str(out))
    assert hyperbisimilar(parse(out.read_text()), catalog("star2"))

    result = invoke(runner, "neg", "one")
    assert hyperbisimilar(parse(result.output), catalog("minus_one"))

    result = invoke(runner, "minimize", "traffic_jam")
    assert len(parse(result.output).positions) == 8


def test_equiv_impartial_mode(runner, tmp_path):
    tj = catalog("traffic_jam")
    p1, p2 = tmp_path / "c.hyg", tmp_path / "d.hyg"
    p1.write_text(serialize(GameGraph(tj.positions, "C")))
    p2.write_text(serialize(GameGraph(tj.positions, "D")))
    result = invoke(runner, "equiv", "--impartial", str(p1), str(p2))
    assert result.output.strip() == "equivalent"
    assert invoke(runner, "equiv", "--impartial", "one", "zero").exit_code == 4


def test_equiv_conway_mode(runner):
    result = invoke(runner, "equiv", "--conway", "star2", "star3")
    assert result.output.strip() == "not equivalent"
    assert invoke(runner, "equiv", "--conway", "c", "zero").exit_code == 4


def test_equiv_context_probe_reports_witness(runner):
    result = invoke(runner, "equiv", "star1", "star2", "--contexts", "32", "--json")
    payload = json.loads(result.output)
    assert payload["indistinguishable"] is False
    witness = parse(json.dumps(payload["witness"]))
    assert hyperbisimilar(witness, catalog("star1"))


def test_equiv_context_probe_indistinguishable(runner):
    result = invoke(runner, "equiv", "c", "c", "--contexts", "8")
    assert "indistinguishable over 8 contexts" in result.output


def test_strategy_command(runner):
    payload = json.loads(invoke(runner, "strategy", "a", "--player", "L", "--json").output)
    assert payload["claim"] == "nonlosing"
    assert payload["roles"]["LI"] == {"a": "b"}

    result = invoke(runner, "strategy", "c", "--player", "II", "--verify")
    assert result.exit_code == 0
    assert "nonlosing" in result.output and "verified" in result.output

    assert invoke(runner, "strategy", "zero", "--player", "I").output.strip() == "none"


def test_strategy_winning_claim(runner):
    payload = json.loads(invoke(runner, "strategy", "d", "--player", "II", "--json", "--verify").output)
    assert payload["claim"] == "winning"
    assert payload["verified"] is True


def test_analyze_and_grundy_agree_on_impartial_inputs(runner, tmp_path):
    sector_of_outcome = {"WinII": "WinII", "WinI": "WinI", "Draw": "NL_All"}
    names = ["zero", "c", "d", "star3", "traffic_jam", "inf{1,2}"]
    from hypergames import GeneratorParams, generate

    files = []
    for k in range(6):
        path = tmp_path / f"gen{k}.hyg"
        path.write_text(serialize(generate(GeneratorParams(positions=2 + k, density=0.4, impartial=True, seed=800 + k))))
        files.append(str(path))
    for ref in names + files:
        analysis = json.loads(invoke(runner, "analyze", "--json", ref).output)
        values = json.loads(invoke(runner, "grundy", "--json", ref).output)
        assert analysis["sector"] == sector_of_outcome[values["outcome"]]


def test_play_zero_immediate_loss(runner):
    result = invoke(runner, "play", "zero", "--as", "L")
    assert result.exit_code == 0
    assert "you lose" in result.output


def test_play_engine_draws_on_game_a(runner):
    # Human R never actually gets a legal choice beyond b -> a.
    result = invoke(runner, "play", "a", "--as", "R", input="a\n")
    assert "draw" in result.output


def test_play_star1_opener_win(runner):
    result = invoke(runner, "play", "star1", "--as", "L", input="*0\n")
    assert "you win" in result.output


def test_play_reprompts_on_illegal_move(runner):
    result = invoke(runner, "play", "star1", "--as", "L", input="bogus\n*0\n")
    assert "illegal move" in result.output
    assert "you win" in result.output


def test_play_eof_aborts_with_130(runner):
    result = invoke(runner, "play", "star1", "--as", "L", input="")
    assert result.exit_code == 130


def test_gen_deterministic_and_analyzable(runner, tmp_path):
    out1, out2 = tmp_path / "g1.hyg", tmp_path / "g2.hyg"
    invoke(runner, "gen", "--seed", "7", "-o", str(out1))
    invoke(runner, "gen", "--seed", "7", "-o", str(out2))
    assert out1.read_bytes() == out2.read_bytes()

    result = invoke(runner, "gen", "--seed", "3", "--acyclic", "--impartial")
    g = parse(result.output)
    path = tmp_path / "imp.hyg"
    path.write_text(serialize(g))
    assert invoke(runner, "grundy", str(path)).exit_code == 0
