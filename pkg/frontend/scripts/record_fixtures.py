"""Record golden API fixtures for the explorer UI tests.

Run from the repository root:  python3 frontend/scripts/record_fixtures.py
Every fixture is a verbatim response of the real service, so the UI tests
compare against exactly what the backend serves.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from hypergames.service import create_app

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def dump(name: str, payload) -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / name).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    print("wrote", name)


def main() -> None:
    client = TestClient(create_app())

    dump("games.json", client.get("/games").json())

    for name in ("traffic_jam", "zero", "a", "star1", "star2", "c"):
        doc = client.get(f"/games/{name}").json()
        dump(f"{name}.doc.json", doc)
        dump(f"{name}.analysis.json", client.post("/analyze", json=doc).json())

    # Scripted draw: human plays R on game `a`, engine L opens with a -> b,
    # the human's only reply b -> a repeats the (a, L) state.
    steps = []
    s = client.post("/sessions", json={"game": "a", "humanSide": "R", "opener": "L"}).json()
    steps.append(s)
    s = client.post(f"/sessions/{s['id']}/move", json={"target": "a"}).json()
    steps.append(s)
    dump("session_a_draw.json", steps)

    # Scripted win: human opens star1 by moving to *0; the engine is stuck.
    steps = []
    s = client.post("/sessions", json={"game": "star1", "humanSide": "L", "opener": "L"}).json()
    steps.append(s)
    s = client.post(f"/sessions/{s['id']}/move", json={"target": "*0"}).json()
    steps.append(s)
    dump("session_star1_win.json", steps)


if __name__ == "__main__":
    main()
