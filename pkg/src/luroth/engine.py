"""Referee and state machine for Schmidt games.

Enforces the nesting and radius rules for both game variants, records full
transcripts (JSON lines: config, one move per line, closing outcome line),
and computes the limit ball of a finished game.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterable, Protocol

from .geometry import ClosedBall, format_rational, parse_rational

__all__ = [
    "GameConfig",
    "Move",
    "Violation",
    "GameTranscript",
    "validate_move",
    "validate_opening",
    "play",
    "limit_ball",
]

WINNING = "winning"
STRONG = "strong"


@dataclass(frozen=True)
class GameConfig:
    alpha: Fraction
    beta: Fraction
    mode: str = WINNING
    max_rounds: int = 100
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if not (0 < self.alpha < 1) or not (0 < self.beta < 1):
            raise ValueError("alpha and beta must lie in (0, 1)")
        if self.mode not in (WINNING, STRONG):
            raise ValueError(f"unknown mode {self.mode!r}")

    def to_json(self) -> dict:
        return {
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta),
            "mode": self.mode,
            "max_rounds": self.max_rounds,
            "rng_seed": self.rng_seed,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GameConfig":
        return cls(
            alpha=parse_rational(obj["alpha"]),
            beta=parse_rational(obj["beta"]),
            mode=obj.get("mode", WINNING),
            max_rounds=int(obj.get("max_rounds", 100)),
            rng_seed=int(obj.get("rng_seed", 0)),
        )


@dataclass(frozen=True)
class Move:
    player: str  # "A" or "B"
    ball: ClosedBall
    annotation: dict | None = None

    def to_json(self) -> dict:
        obj = {"player": self.player, "ball": self.ball.to_json()}
        if self.annotation is not None:
            obj["annotation"] = self.annotation
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "Move":
        return cls(obj["player"], ClosedBall.from_json(obj["ball"]), obj.get("annotation"))


@dataclass(frozen=True)
class Violation:
    reason: str  # radius-not-equal | radius-too-small | not-nested | bad-ball
    player: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"reason": self.reason, "player": self.player, "detail": self.detail}


@dataclass
class GameTranscript:
    config: GameConfig
    moves: list[Move] = field(default_factory=list)
    outcome: str = "in-progress"  # in-progress | completed | violation
    violation: Violation | None = None

    @property
    def last_ball(self) -> ClosedBall:
        return self.moves[-1].ball

    def balls(self) -> Iterable[ClosedBall]:
        return (m.ball for m in self.moves)

    def rounds(self) -> int:
        return sum(1 for m in self.moves if m.player == "B")

    def to_jsonl(self) -> str:
        lines = [json.dumps({"config": self.config.to_json()})]
        lines.extend(json.dumps(m.to_json()) for m in self.moves)
        closing: dict = {"outcome": self.outcome}
        if self.violation is not None:
            closing["violation"] = self.violation.to_json()
        lines.append(json.dumps(closing))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_jsonl(cls, text: str) -> "GameTranscript":
        lines = [line for line in text.splitlines() if line.strip()]
        header = json.loads(lines[0])
        transcript = cls(GameConfig.from_json(header["config"]))
        for line in lines[1:]:
            obj = json.loads(line)
            if "outcome" in obj:
                transcript.outcome = obj["outcome"]
                if obj.get("violation"):
                    v = obj["violation"]
                    transcript.violation = Violation(v["reason"], v["player"], v.get("detail", ""))
            else:
                transcript.moves.append(Move.from_json(obj))
        return transcript

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_jsonl())

    @classmethod
    def load(cls, path) -> "GameTranscript":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_jsonl(fh.read())


class MoveSupplier(Protocol):
    def move(self, transcript: GameTranscript) -> Move: ...


def validate_opening(ball: ClosedBall) -> Violation | None:
    # Any valid ClosedBall is a legal opening for Player B.
    return None


def _expected_factor(player: str, config: GameConfig) -> Fraction:
    return config.alpha if player == "A" else config.beta


def validate_move(prev: ClosedBall, move: Move, config: GameConfig) -> Violation | None:
    """Check one move against the active rule set; None means legal."""
    factor = _expected_factor(move.player, config)
    want = factor * prev.radius
    if config.mode == WINNING:
        if move.ball.radius != want:
            return Violation(
                "radius-not-equal",
                move.player,
                f"radius {move.ball.radius} != {want}",
            )
    else:
        if move.ball.radius < want:
            return Violation(
                "radius-too-small",
                move.player,
                f"radius {move.ball.radius} < {want}",
            )
        if move.ball.radius > prev.radius:
            return Violation("not-nested", move.player, "radius exceeds previous ball")
    if not prev.contains_ball(move.ball):
        return Violation("not-nested", move.player, "ball not inside previous ball")
    return None


def verify_transcript(transcript: GameTranscript) -> Violation | None:
    """Replay-validate every recorded move; None when fully legal."""
    moves = transcript.moves
    if not moves:
        return None
    if moves[0].player != "B":
        return Violation("bad-ball", moves[0].player, "transcript must open with B")
    for i in range(1, len(moves)):
        expected = "A" if moves[i - 1].player == "B" else "B"
        if moves[i].player != expected:
            return Violation("bad-ball", moves[i].player, "players must alternate")
        bad = validate_move(moves[i - 1].ball, moves[i], transcript.config)
        if bad is not None:
            return bad
    return None


def play(
    config: GameConfig,
    strategy_a: MoveSupplier,
    strategy_b: MoveSupplier,
    initial_b: ClosedBall,
    stop: Callable[[GameTranscript], bool] | None = None,
) -> GameTranscript:
    """Run a finite game: alternate the two suppliers, validating each move.

    A supplier returning an invalid move ends the game with a violation
    attributed to that player; the move itself is not recorded.
    """
    transcript = GameTranscript(config)
    transcript.moves.append(Move("B", initial_b))
    for round_no in range(1, config.max_rounds + 1):
        if round_no > 1:
            b_move = strategy_b.move(transcript)
            b_move = replace(b_move, player="B")
            bad = validate_move(transcript.last_ball, b_move, config)
            if bad is not None:
                transcript.outcome = "violation"
                transcript.violation = bad
                return transcript
            transcript.moves.append(b_move)
        a_move = strategy_a.move(transcript)
        a_move = replace(a_move, player="A")
        bad = validate_move(transcript.last_ball, a_move, config)
        if bad is not None:
            transcript.outcome = "violation"
            transcript.violation = bad
            return transcript
        transcript.moves.append(a_move)
        if stop is not None and stop(transcript):
            break
    transcript.outcome = "completed"
    return transcript


def limit_ball(transcript: GameTranscript) -> ClosedBall:
    """The last ball of a finished transcript; every later ball would lie
    inside it, so it brackets the would-be infinite intersection."""
    if not transcript.moves:
        raise ValueError("empty transcript has no limit ball")
    return transcript.last_ball
