"""HTTP API: game catalog, analysis, and stateful play sessions.

Sessions live in memory with TTL eviction and are serialized per session:
concurrent mutations of one session queue up behind a lock, so the second
request observes the updated state (or a conflict).  Graphs are immutable
and shared freely; analysis endpoints are stateless.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Optional, Union

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from . import arena, corpus, grundy, order
from .graph import GameGraph, Side

SESSION_TTL_SECONDS = 3600.0


class CreateSessionBody(BaseModel):
    game: Union[str, dict]
    humanSide: str = "L"
    opener: str = "L"


class MoveBody(BaseModel):
    target: str


@dataclass
class Session:
    id: str
    graph: GameGraph
    game_name: Optional[str]
    human: Side
    current: str
    mover: Side
    history: list[tuple[str, Side]]
    status: str = "active"  # active | WinL | WinR | Draw
    repeated: Optional[tuple[str, Side]] = None
    solution: arena.ArenaSolution = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def engine(self) -> Side:
        return self.human.opponent


def _load_document(game: Union[str, dict]) -> tuple[GameGraph, Optional[str]]:
    if isinstance(game, str):
        try:
            return corpus.catalog(game), game
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown game {game!r}")
    try:
        return corpus.parse(json.dumps(game)), None
    except corpus.InvalidGraphError as e:
        raise HTTPException(status_code=400, detail=f"invalid graph: {e}")
    except corpus.ParseError as e:
        raise HTTPException(status_code=400, detail=f"parse error: {e}")


def _analysis_payload(g: GameGraph) -> dict:
    profile = order.outcome_profile(g)
    cls = order.classify(profile)
    sol = arena.solve_arena(g)
    per_position = {
        p: order.classify(sol.profile_at(p)).sector.value for p in sorted(g.positions)
    }
    payload: dict = {
        "profile": list(profile.as_tuple()),
        "sector": cls.sector.value,
        "nonlosing": [p.value for p in cls.nonlosing],
        "winning": cls.winning.value if cls.winning else None,
        "positions": per_position,
        "grundy": None,
        "rootGrundy": None,
        "outcome": None,
    }
    try:
        marking = grundy.grundy_marking(g)
    except ValueError:
        marking = None  # partizan: no Grundy section
    if marking is not None:
        payload["grundy"] = {p: v.text() for p, v in marking.items()}
        payload["rootGrundy"] = marking[g.root].text()
        payload["outcome"] = grundy.outcome_of_value(marking[g.root]).value
    return payload


def _session_payload(s: Session) -> dict:
    legal = sorted(s.graph.moves(s.current, s.mover)) if s.status == "active" else []
    what_if = {
        q: order.classify(s.solution.profile_at(q)).sector.value for q in legal
    }
    return {
        "id": s.id,
        "game": s.game_name,
        "humanSide": s.human.value,
        "engineSide": s.engine.value,
        "position": s.current,
        "mover": s.mover.value if s.status == "active" else None,
        "status": s.status,
        "history": [[p, m.value] for p, m in s.history],
        "legalMoves": legal,
        "whatIf": what_if,
        "repeated": [s.repeated[0], s.repeated[1].value] if s.repeated else None,
    }


def _apply_move(s: Session, target: str) -> None:
    s.current = target
    s.mover = s.mover.opponent
    state = (s.current, s.mover)
    if state in s.history:
        s.status = "Draw"
        s.repeated = state
    s.history.append(state)


def _advance(s: Session) -> None:
    """Resolve stuck movers and let the engine reply until it is the human's turn."""
    while s.status == "active":
        moves = s.graph.moves(s.current, s.mover)
        if not moves:
            s.status = "WinL" if s.mover is Side.R else "WinR"
            return
        if s.mover is s.human:
            return
        target = arena.engine_choice(s.graph, s.solution, s.current, s.mover)
        _apply_move(s, target)


def create_app() -> FastAPI:
    app = FastAPI(title="hypergames", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    sessions: dict[str, tuple[Session, float]] = {}
    store_lock = threading.Lock()

    def _get_session(session_id: str) -> Session:
        now = time.monotonic()
        with store_lock:
            expired = [sid for sid, (_, deadline) in sessions.items() if deadline < now]
            for sid in expired:
                del sessions[sid]
            entry = sessions.get(session_id)
            if entry is None:
                raise HTTPException(status_code=404, detail="unknown session")
            session, _ = entry
            sessions[session_id] = (session, now + SESSION_TTL_SECONDS)
            return session

    @app.get("/games")
    def list_games() -> dict:
        return {"games": corpus.catalog_names()}

    @app.get("/games/{name}")
    def get_game(name: str) -> dict:
        try:
            g = corpus.catalog(name)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown game {name!r}")
        return json.loads(corpus.serialize(g))

    @app.post("/analyze")
    def analyze(body: dict) -> dict:
        g, _ = _load_document(body)
        return _analysis_payload(g)

    @app.post("/sessions")
    def create_session(body: CreateSessionBody) -> dict:
        if body.humanSide not in ("L", "R") or body.opener not in ("L", "R"):
            raise HTTPException(status_code=400, detail="sides must be 'L' or 'R'")
        g, name = _load_document(body.game)
        session = Session(
            id=uuid.uuid4().hex,
            graph=g,
            game_name=name,
            human=Side(body.humanSide),
            current=g.root,
            mover=Side(body.opener),
            history=[(g.root, Side(body.opener))],
            solution=arena.solve_arena(g),
        )
        _advance(session)
        with store_lock:
            sessions[session.id] = (session, time.monotonic() + SESSION_TTL_SECONDS)
        return _session_payload(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        session = _get_session(session_id)
        with session.lock:
            return _session_payload(session)

    @app.post("/sessions/{session_id}/move")
    def move(session_id: str, body: MoveBody) -> dict:
        session = _get_session(session_id)
        with session.lock:
            if session.status != "active":
                raise HTTPException(status_code=409, detail="session is finished")
            if session.mover is not session.human:
                raise HTTPException(status_code=409, detail="not your turn")
            if body.target not in session.graph.moves(session.current, session.mover):
                raise HTTPException(status_code=409, detail=f"illegal move {body.target!r}")
            _apply_move(session, body.target)
            _advance(session)
            return _session_payload(session)

    return app
