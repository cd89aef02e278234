"""HTTP play API: sessions, human moves, engine replies, hint overlays.

JSON over HTTP, schema versioned with a "v" field.  All game logic lives
here on the server; clients may duplicate validation for responsiveness
but the server is the authority.  Engine replies are computed
synchronously with the move they answer.

A move is a list of (from, to) square pairs; the pairing is the coin
assignment, so multi-coin moves are unambiguous.  Illegal moves are
rejected with HTTP 422 and the index of the violated condition: 1 (moved
coin count must be positive and below the index k), 2 (coins only move
down), 3 (the order condition on the removed amounts), or "distinct"
(target square already occupied).
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from . import board, grundy
from .board import Position
from .engine import (
    GameRules,
    SgOracle,
    Variant,
    legal_moves,
    violated_condition,
)

API_VERSION = 1

CoinTuple = tuple[int, ...]
MovePairs = list[tuple[int, int]]


class SessionCreate(BaseModel):
    v: int = API_VERSION
    p: int
    k: Optional[int] = None
    coins: list[int]
    engine_first: bool = False


class MoveRequest(BaseModel):
    v: int = API_VERSION
    session: str
    move: list[tuple[int, int]]


@dataclass
class SessionState:
    id: str
    rules: GameRules
    position: CoinTuple
    history: list[dict] = field(default_factory=list)
    turn: str = "human"
    winner: Optional[str] = None
    oracle: Optional[SgOracle] = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def saturated(self) -> bool:
        return self.rules.k >= self.rules.m + 1

    def sg_of(self, coins: CoinTuple) -> int:
        if self.saturated:
            return grundy.sg_tower(Position(coins), self.rules.p).value
        assert self.oracle is not None
        return self.oracle.sg(tuple(sorted(coins)))

    @property
    def over(self) -> bool:
        return self.winner is not None


def _sg_payload(state: SessionState, coins: CoinTuple) -> dict:
    value = state.sg_of(coins)
    return {
        "value": value,
        "digits": list(grundy.sg_tower(Position(coins), state.rules.p).digits)
        if state.saturated
        else list(_digits(value, state.rules.p)),
        "base": state.rules.p,
        "method": "closed" if state.saturated else "oracle",
    }


def _digits(value: int, p: int) -> list[int]:
    out = []
    while value:
        value, d = divmod(value, p)
        out.append(d)
    return out


def _session_payload(state: SessionState) -> dict:
    pos = Position(state.position)
    return {
        "v": API_VERSION,
        "id": state.id,
        "rules": {
            "p": state.rules.p,
            "k": state.rules.k,
            "m": state.rules.m,
            "variant": state.rules.variant.value,
        },
        "position": list(pos.coins),
        "partition": list(board.partition_of(pos).parts),
        "tower": list(board.tower(pos, state.rules.p).rows),
        "sg": _sg_payload(state, state.position),
        "turn": state.turn,
        "over": state.over,
        "winner": state.winner,
        "history": state.history,
    }


def _options_with_pairs(state: SessionState) -> list[tuple[CoinTuple, MovePairs]]:
    """Distinct set-level options of the current position, each with one
    legal (from, to) assignment, in deterministic order."""
    X = tuple(sorted(state.position))
    out: list[tuple[CoinTuple, MovePairs]] = []
    seen: set[CoinTuple] = set()
    for Y in legal_moves(state.rules, X):
        key = tuple(sorted(Y))
        if key in seen:
            continue
        seen.add(key)
        pairs = [(x, y) for x, y in zip(X, Y) if x != y]
        out.append((key, pairs))
    return out


def _engine_choice(state: SessionState) -> tuple[CoinTuple, MovePairs, bool] | None:
    """Pick the engine's reply: a value-0 option when one exists, otherwise
    the legal move whose resulting position offers the opponent the fewest
    value-0 continuations (an admitted heuristic), flagged as a losing spot.
    """
    options = _options_with_pairs(state)
    if not options:
        return None
    winning = [(pos, pairs) for pos, pairs in options if state.sg_of(pos) == 0]
    if winning:
        pos, pairs = min(winning, key=lambda item: item[0])
        return pos, pairs, False

    def opponent_outs(coins: CoinTuple) -> int:
        lookahead = SessionState(
            id=state.id, rules=state.rules, position=coins, oracle=state.oracle
        )
        return sum(1 for pos, _ in _options_with_pairs(lookahead) if state.sg_of(pos) == 0)

    pos, pairs = min(options, key=lambda item: (opponent_outs(item[0]), item[0]))
    return pos, pairs, True


def _apply_engine_move(state: SessionState) -> Optional[dict]:
    if board.is_terminal(Position(state.position)):
        state.winner = "human"
        state.turn = "none"
        return None
    choice = _engine_choice(state)
    assert choice is not None, "non-terminal positions always have moves"
    coins, pairs, losing_spot = choice
    state.position = coins
    state.history.append({"position": list(coins), "by": "engine"})
    if board.is_terminal(Position(coins)):
        state.winner = "engine"
        state.turn = "none"
    else:
        state.turn = "human"
    return {
        "pairs": [list(p) for p in pairs],
        "position": list(coins),
        "losing_spot": losing_spot,
        "sg": _sg_payload(state, coins),
    }


def create_app(assets_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="pwelter play API")
    sessions: dict[str, SessionState] = {}
    registry_lock = threading.Lock()

    def get_session(session_id: str) -> SessionState:
        with registry_lock:
            state = sessions.get(session_id)
        if state is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return state

    @app.post("/api/session")
    def create_session(req: SessionCreate) -> dict:
        try:
            position = Position(req.coins)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail={"condition": "position", "message": str(exc)})
        m = len(position)
        if m == 0:
            raise HTTPException(status_code=422, detail={"condition": "position", "message": "need at least one coin"})
        k = req.k if req.k is not None else m + 1
        if k < 2:
            raise HTTPException(
                status_code=422,
                detail={"condition": "position", "message": "index k must be at least 2 (k=1 allows no moves)"},
            )
        try:
            rules = GameRules(p=req.p, k=k, variant=Variant.WELTER, m=m)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail={"condition": "position", "message": str(exc)})
        state = SessionState(
            id=uuid.uuid4().hex,
            rules=rules,
            position=position.coins,
            turn="engine" if req.engine_first else "human",
        )
        if not state.saturated:
            state.oracle = SgOracle(rules, bound=max(position.coins) + 1)
        state.history.append({"position": list(position.coins), "by": "start"})
        initial_sg = _sg_payload(state, state.position)
        engine_move = None
        with state.lock:
            if board.is_terminal(position):
                # Whoever is to move from the empty diagram has already lost.
                state.winner = "engine" if state.turn == "human" else "human"
                state.turn = "none"
            elif req.engine_first:
                engine_move = _apply_engine_move(state)
        with registry_lock:
            sessions[state.id] = state
        return {
            "v": API_VERSION,
            "session": _session_payload(state),
            "initial_sg": initial_sg,
            "engine_move": engine_move,
        }

    @app.get("/api/session/{session_id}")
    def session_state(session_id: str) -> dict:
        return _session_payload(get_session(session_id))

    @app.post("/api/move")
    def apply_move(req: MoveRequest) -> dict:
        state = get_session(req.session)
        with state.lock:
            if state.over:
                raise HTTPException(status_code=409, detail="game is over")
            if state.turn != "human":
                raise HTTPException(status_code=409, detail="not the human's turn")
            X = tuple(sorted(state.position))
            if not req.move:
                raise HTTPException(
                    status_code=422,
                    detail={"condition": 1, "message": "a move must displace at least one coin"},
                )
            sources = [f for f, _ in req.move]
            if len(set(sources)) != len(sources):
                raise HTTPException(
                    status_code=422,
                    detail={"condition": "position", "message": "each coin may move at most once"},
                )
            mapping = dict(req.move)
            unknown = [f for f in sources if f not in X]
            if unknown:
                raise HTTPException(
                    status_code=422,
                    detail={"condition": "position", "message": f"no coin on square {unknown[0]}"},
                )
            if any(t < 0 for t in mapping.values()):
                raise HTTPException(
                    status_code=422,
                    detail={"condition": 2, "message": "squares are non-negative"},
                )
            Y = tuple(mapping.get(x, x) for x in X)
            violated = violated_condition(state.rules, X, Y)
            if violated is not None:
                messages = {
                    1: f"moved-coin count must be positive and below k={state.rules.k}",
                    2: "coins may only move to lower squares",
                    3: "the total decrease must have the p-adic order of the smallest per-coin decrease",
                    "distinct": "target square already occupied",
                }
                raise HTTPException(
                    status_code=422,
                    detail={"condition": violated, "message": messages[violated]},
                )
            state.position = tuple(sorted(Y))
            state.history.append({"position": list(state.position), "by": "human"})
            state.turn = "engine"
            sg_after_human = _sg_payload(state, state.position)
            engine_move = _apply_engine_move(state)
            return {
                "v": API_VERSION,
                "state": _session_payload(state),
                "sg_after_human": sg_after_human,
                "engine_move": engine_move,
            }

    @app.get("/api/hints")
    def hints(session: str, h: int = 0) -> dict:
        state = get_session(session)
        with state.lock:
            if h < 0:
                raise HTTPException(status_code=422, detail="h must be non-negative")
            options = [
                {
                    "pairs": [list(p) for p in pairs],
                    "position": list(pos),
                    "sg": state.sg_of(pos),
                }
                for pos, pairs in _options_with_pairs(state)
            ]
            return {
                "v": API_VERSION,
                "h": h,
                "options": [o for o in options if o["sg"] == h],
            }

    if assets_dir and Path(assets_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=assets_dir, html=True), name="ui")

    return app
