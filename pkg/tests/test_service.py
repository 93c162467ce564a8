from __future__ import annotations

import json
import threading

import pytest
from fastapi.testclient import TestClient

from hypergames import (
    PositionalStrategy,
    Role,
    Side,
    StrategyBundle,
    catalog,
    engine_choice,
    parse,
    play,
    serialize,
    solve_arena,
)
from hypergames.order import Player
from hypergames.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_games_listing_and_documents(client):
    names = client.get("/games").json()["games"]
    assert "traffic_jam" in names and "zero" in names
    doc = client.get("/games/traffic_jam").json()
    g = parse(json.dumps(doc))
    assert len(g.positions) == 15
    assert client.get("/games/unknown-game").status_code == 404


def test_analyze_endpoint_zero(client):
    doc = client.get("/games/zero").json()
    body = client.post("/analyze", json=doc).json()
    assert body["sector"] == "WinII"
    assert body["profile"] == [True, False, True, False]
    assert body["rootGrundy"] == "0"


def test_analyze_endpoint_traffic_jam_marking(client):
    doc = client.get("/games/traffic_jam").json()
    body = client.post("/analyze", json=doc).json()
    assert body["grundy"]["I"] == "inf{1,2}"
    assert body["grundy"]["L"] == "3"
    assert body["positions"]["C"] == "WinII"
    assert body["outcome"] == "Draw"


def test_analyze_partizan_omits_grundy(client):
    doc = client.get("/games/one").json()
    body = client.post("/analyze", json=doc).json()
    assert body["sector"] == "WinL"
    assert body["grundy"] is None and body["outcome"] is None


def test_analyze_rejects_invalid_documents(client):
    r = client.post("/analyze", json={"hyg": 1, "root": "x", "positions": {"y": {"moves": []}}})
    assert r.status_code == 400
    r = client.post("/analyze", json={"positions": {}})
    assert r.status_code == 400


def test_session_on_zero_finishes_immediately(client):
    s = client.post("/sessions", json={"game": "zero", "humanSide": "L", "opener": "L"}).json()
    assert s["status"] == "WinR"
    assert s["legalMoves"] == []


def test_session_draw_on_game_a(client):
    s = client.post("/sessions", json={"game": "a", "humanSide": "R", "opener": "L"}).json()
    assert s["status"] == "active"
    assert s["position"] == "b" and s["mover"] == "R"
    s2 = client.post(f"/sessions/{s['id']}/move", json={"target": "a"}).json()
    assert s2["status"] == "Draw"
    assert s2["repeated"] == ["a", "L"]


def test_session_what_if_on_star2(client):
    s = client.post("/sessions", json={"game": "star2", "humanSide": "L", "opener": "L"}).json()
    assert s["whatIf"]["*0"] == "WinII"
    assert s["whatIf"]["*1"] == "WinI"


def test_session_errors(client):
    assert client.get("/sessions/nope").status_code == 404
    s = client.post("/sessions", json={"game": "star1", "humanSide": "L", "opener": "L"}).json()
    r = client.post(f"/sessions/{s['id']}/move", json={"target": "bogus"})
    assert r.status_code == 409
    done = client.post(f"/sessions/{s['id']}/move", json={"target": "*0"}).json()
    assert done["status"] == "WinL"
    r = client.post(f"/sessions/{s['id']}/move", json={"target": "*0"})
    assert r.status_code == 409
    assert client.post("/sessions", json={"game": "who?", "humanSide": "L", "opener": "L"}).status_code == 404


def test_session_not_your_turn_conflict(client):
    # Human L, opener L on game b: L has no move at b, session ends instantly;
    # use a0 instead where both sides stay busy.
    s = client.post("/sessions", json={"game": "c", "humanSide": "L", "opener": "L"}).json()
    assert s["status"] == "active" and s["mover"] == "L"
    # after our move the engine replies and it is our turn again, never 409
    s2 = client.post(f"/sessions/{s['id']}/move", json={"target": "c"}).json()
    assert s2["status"] in ("active", "Draw")


def test_session_replay_matches_play_engine():
    """A finished session replayed through the play engine gives the same verdict."""
    client = TestClient(create_app())
    s = client.post("/sessions", json={"game": "a0", "humanSide": "R", "opener": "L"}).json()
    g = catalog("a0")
    sol = solve_arena(g)
    human_choices: dict[str, str] = {}
    while s["status"] == "active":
        target = sorted(s["legalMoves"])[0]
        human_choices[s["position"]] = target
        s = client.post(f"/sessions/{s['id']}/move", json={"target": target}).json()

    engine_map = {
        p: engine_choice(g, sol, p, Side.L)
        for p in g.positions
        if g.moves(p, Side.L)
    }
    engine_bundle = StrategyBundle(
        Player.L,
        {Role.LI: PositionalStrategy(Side.L, engine_map), Role.LII: PositionalStrategy(Side.L, engine_map)},
    )
    human_bundle = StrategyBundle(
        Player.R,
        {Role.RI: PositionalStrategy(Side.R, human_choices), Role.RII: PositionalStrategy(Side.R, human_choices)},
    )
    verdict = play(g, engine_bundle, human_bundle, opener=Side.L)
    assert verdict.result == s["status"]
    assert [list(t) for t in [(p, m.value) for p, m in verdict.trace]] == [
        [p, m] for p, m in s["history"]
    ]


def test_concurrent_distinct_sessions_do_not_interleave(client):
    ids = []
    for _ in range(4):
        s = client.post("/sessions", json={"game": "c", "humanSide": "L", "opener": "L"}).json()
        ids.append(s["id"])

    def hammer(sid: str):
        client.post(f"/sessions/{sid}/move", json={"target": "c"})

    threads = [threading.Thread(target=hammer, args=(sid,)) for sid in ids]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    states = [client.get(f"/sessions/{sid}").json() for sid in ids]
    # Every session saw exactly its own single human move plus the engine reply.
    for s in states:
        assert s["status"] == "Draw"
        assert len(s["history"]) == 3


def test_inline_document_sessions(client):
    doc = json.loads(serialize(catalog("star1")))
    s = client.post("/sessions", json={"game": doc, "humanSide": "L", "opener": "R"}).json()
    # Engine R opens on star1 by taking the winning move to *0.
    assert s["status"] in ("active", "WinR")
