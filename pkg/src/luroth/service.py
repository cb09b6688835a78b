"""HTTP game service.

The server takes the Player-A side; the client plays B over JSON.  An
illegal B move is rejected with 422 plus the violation reason and does not
consume the turn.  Every accepted move is answered by A in the same request
and the updated transcript is persisted to the data directory.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel

from .geometry import ClosedBall, format_rational, parse_rational
from .commensurate import danger_interval
from .engine import GameConfig, GameTranscript, Move, validate_move
from .strategy import ALPHA, NaivePlayerA, PlayerA, constants
from .verifier import check_bounded
from .oracles import window_elements

__all__ = ["create_app"]


class NewGame(BaseModel):
    beta: str = "1/2"
    mode: str = "winning"
    center: str = "1/2"
    radius: str = "1/2"
    max_rounds: int = 200
    naive: bool = False


class BallIn(BaseModel):
    center: str
    radius: str


def _parse_ball(body: BallIn) -> ClosedBall:
    try:
        return ClosedBall.make(parse_rational(body.center), parse_rational(body.radius))
    except (ValueError, ZeroDivisionError) as exc:
        raise HTTPException(status_code=422, detail={"reason": "bad-ball", "detail": str(exc)})


@dataclass
class GameState:
    config: GameConfig
    transcript: GameTranscript
    player_a: PlayerA | NaivePlayerA
    bound: int
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def turn(self) -> str:
        return "B" if self.transcript.moves[-1].player == "A" else "A"


def create_app(data_dir: str | Path = "./games") -> FastAPI:
    data_path = Path(data_dir)
    data_path.mkdir(parents=True, exist_ok=True)
    app = FastAPI(title="Lüroth Schmidt-game service")
    games: dict[str, GameState] = {}

    def _get(game_id: str) -> GameState:
        state = games.get(game_id)
        if state is None:
            raise HTTPException(status_code=404, detail="no such game")
        return state

    def _persist(game_id: str, state: GameState) -> None:
        state.transcript.save(data_path / f"{game_id}.jsonl")

    def _public(game_id: str, state: GameState, rejected=None) -> dict:
        t = state.transcript
        out = {
            "id": game_id,
            "config": t.config.to_json(),
            "bound": state.bound,
            "turn": state.turn,
            "rounds": t.rounds(),
            "outcome": t.outcome,
            "moves": [m.to_json() for m in t.moves],
        }
        if rejected is not None:
            out["rejected"] = rejected
        return out

    @app.post("/games")
    def new_game(body: NewGame) -> dict:
        try:
            beta = parse_rational(body.beta)
            config = GameConfig(ALPHA, beta, body.mode, body.max_rounds)
            opening = ClosedBall.make(parse_rational(body.center), parse_rational(body.radius))
        except (ValueError, ZeroDivisionError) as exc:
            raise HTTPException(status_code=422, detail={"reason": "bad-ball", "detail": str(exc)})
        player_a = NaivePlayerA() if body.naive else PlayerA(beta)
        transcript = GameTranscript(config)
        transcript.moves.append(Move("B", opening))
        transcript.moves.append(player_a.move(transcript))
        game_id = uuid.uuid4().hex[:12]
        state = GameState(config, transcript, player_a, constants(beta).b)
        games[game_id] = state
        _persist(game_id, state)
        return _public(game_id, state)

    @app.get("/games/{game_id}")
    def get_game(game_id: str) -> dict:
        return _public(game_id, _get(game_id))

    @app.post("/games/{game_id}/move")
    def post_move(game_id: str, body: BallIn) -> dict:
        state = _get(game_id)
        ball = _parse_ball(body)
        with state.lock:
            if state.turn != "B":
                raise HTTPException(status_code=409, detail="not B's turn")
            if state.transcript.rounds() >= state.config.max_rounds:
                raise HTTPException(status_code=409, detail="game over")
            move = Move("B", ball)
            bad = validate_move(state.transcript.last_ball, move, state.config)
            if bad is not None:
                # Turn preserved: nothing is recorded.
                raise HTTPException(status_code=422, detail=bad.to_json())
            state.transcript.moves.append(move)
            state.transcript.moves.append(state.player_a.move(state.transcript))
            _persist(game_id, state)
            return _public(game_id, state)

    @app.get("/games/{game_id}/elements")
    def get_elements(
        game_id: str,
        generation: int,
        left: str,
        right: str,
        max: int = 50,
    ) -> dict:
        state = _get(game_id)
        try:
            found, truncated = window_elements(
                parse_rational(left), parse_rational(right), generation, max
            )
        except (ValueError, ZeroDivisionError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return {
            "generation": generation,
            "elements": [
                {
                    **e.to_json(),
                    "length": format_rational(e.length),
                    "danger": danger_interval(e, state.bound).to_json(),
                }
                for e in found
            ],
            "truncated": truncated,
        }

    @app.get("/games/{game_id}/transcript", response_class=PlainTextResponse)
    def get_transcript(game_id: str) -> str:
        state = _get(game_id)
        with state.lock:
            text = state.transcript.to_jsonl()
        return text

    @app.post("/games/{game_id}/verify")
    def post_verify(game_id: str) -> dict:
        state = _get(game_id)
        with state.lock:
            transcript = GameTranscript.from_jsonl(state.transcript.to_jsonl())
        transcript.outcome = "completed"
        try:
            report = check_bounded(transcript, constants(state.config.beta))
        except ValueError as exc:
            raise HTTPException(status_code=409, detail=str(exc))
        return report.to_json()

    return app
