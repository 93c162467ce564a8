"""Walk the HTTP API in-process: analysis payloads and a play session that
ends in a detected draw.

Run from the repository root:  python3 demos/04_service_sessions.py
(For a real server use:  hypergames serve --port 8000)
"""

import json

from fastapi.testclient import TestClient

from hypergames.service import create_app

client = TestClient(create_app())

print("=== Catalog over HTTP ===\n")
names = client.get("/games").json()["games"]
print("games:", ", ".join(names))

print("\n=== Analysis payload for the traffic jam ===\n")
doc = client.get("/games/traffic_jam").json()
analysis = client.post("/analyze", json=doc).json()
print("sector:", analysis["sector"], "| root value:", analysis["rootGrundy"],
      "| outcome:", analysis["outcome"])
print("per-town values:", json.dumps(analysis["grundy"], sort_keys=True))

print("\n=== A session that the engine steers into a draw ===\n")
session = client.post(
    "/sessions", json={"game": "a", "humanSide": "R", "opener": "L"}
).json()
print(f"engine (L) opened; position={session['position']}, your turn as R")
print("legal moves:", session["legalMoves"], "| what-if sectors:", session["whatIf"])
session = client.post(
    f"/sessions/{session['id']}/move", json={"target": session["legalMoves"][0]}
).json()
print("after your reply:", session["status"], "| repeated state:", session["repeated"])
print("history:", session["history"])
print("""
The session tracks (position, mover) states; the moment one repeats, the
play is declared a draw - positional play makes any infinite run periodic,
so the repeat is conclusive, not a heuristic cut-off.
""")
