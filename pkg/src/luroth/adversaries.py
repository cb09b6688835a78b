"""Player-B move suppliers that stress the winning strategy.

The game quantifies over all of B's play; these adversaries sample that
space: seeded uniform play, an accumulation-point seeker that aims for the
danger intervals, a strong-mode radius stresser, transcript replay, and a
remote supplier driven by the game service.
"""

from __future__ import annotations

import queue
import random
from fractions import Fraction

from .geometry import ClosedBall
from .commensurate import cwg, danger_interval
from .engine import STRONG, WINNING, GameConfig, GameTranscript, Move, validate_move

__all__ = [
    "WrongMode",
    "ReplayExhausted",
    "RemoteTimeout",
    "UniformRandomB",
    "AccumulationSeekerB",
    "ShrinkBurstB",
    "ReplayB",
    "RemoteB",
    "make_adversary",
]

#: Random centers are sampled on a grid this fine inside the legal range,
#: which keeps denominator growth per round bounded.
CENTER_GRID = 1 << 16


class WrongMode(RuntimeError):
    pass


class ReplayExhausted(RuntimeError):
    pass


class RemoteTimeout(RuntimeError):
    pass


def _legal_center_range(prev: ClosedBall, radius: Fraction) -> tuple[Fraction, Fraction]:
    slack = prev.radius - radius
    return prev.center - slack, prev.center + slack


class UniformRandomB:
    """Radius per the active rule, center uniform on a rational grid."""

    def __init__(self, config: GameConfig, seed: int | None = None) -> None:
        self.config = config
        self.rng = random.Random(config.rng_seed if seed is None else seed)

    def _radius(self, prev: ClosedBall) -> Fraction:
        base = self.config.beta * prev.radius
        if self.config.mode == WINNING:
            return base
        # Strong variant: any factor in [beta, 1].
        t = Fraction(self.rng.randrange(CENTER_GRID + 1), CENTER_GRID)
        factor = self.config.beta + (1 - self.config.beta) * t
        return factor * prev.radius

    def move(self, transcript: GameTranscript) -> Move:
        prev = transcript.last_ball
        radius = self._radius(prev)
        lo, hi = _legal_center_range(prev, radius)
        t = Fraction(self.rng.randrange(CENTER_GRID + 1), CENTER_GRID)
        center = lo + (hi - lo) * t
        return Move("B", ClosedBall.make(center, radius))


class AccumulationSeekerB:
    """Aims the ball at the nearest danger interval.

    Looks up the commensurate report of A's ball and steers toward the
    midpoint of the danger interval of the lowest-generation surrounding
    element, i.e. toward limit points whose next digit would exceed b.
    """

    def __init__(self, config: GameConfig, b: int) -> None:
        self.config = config
        self.b = b

    def _target(self, prev: ClosedBall) -> tuple[Fraction, bool] | None:
        if prev.wraps or prev.contains_point(Fraction(0)):
            return None
        report = cwg(prev)
        best: tuple[Fraction, bool] | None = None
        for container in report.containers:
            d = danger_interval(container, self.b)
            mid = (d.left + d.right) / 2
            if best is None or abs(mid - prev.center) < abs(best[0] - prev.center):
                best = (mid, False)
        if report.accumulation is not None:
            p = report.accumulation.point
            if best is None or abs(p - prev.center) < abs(best[0] - prev.center):
                # Flush against the accumulation point, on its right.
                best = (p, True)
        return best

    def move(self, transcript: GameTranscript) -> Move:
        prev = transcript.last_ball
        radius = self.config.beta * prev.radius
        lo, hi = _legal_center_range(prev, radius)
        target = self._target(prev)
        if target is None:
            center = prev.center
        else:
            point, flush = target
            center = min(max(point + radius if flush else point, lo), hi)
        return Move("B", ClosedBall.make(center, radius))


class ShrinkBurstB:
    """Strong-mode stresser: alternates the minimal factor beta with the
    larger factor (1 + beta)/2 to force irregular commensurability jumps."""

    def __init__(self, config: GameConfig) -> None:
        if config.mode != STRONG:
            raise WrongMode("shrink-burst only plays the strong variant")
        self.config = config
        self.tick = 0

    def move(self, transcript: GameTranscript) -> Move:
        prev = transcript.last_ball
        factor = self.config.beta if self.tick % 2 == 0 else (1 + self.config.beta) / 2
        self.tick += 1
        return Move("B", ClosedBall.make(prev.center, factor * prev.radius))


class ReplayB:
    """Feeds back the B moves of a recorded transcript, verbatim."""

    def __init__(self, recorded: GameTranscript) -> None:
        # The opening ball is supplied to play() directly; replay the rest.
        self.pending = [m for m in recorded.moves if m.player == "B"][1:]
        self.cursor = 0

    def move(self, transcript: GameTranscript) -> Move:
        if self.cursor >= len(self.pending):
            raise ReplayExhausted("recorded transcript has no more B moves")
        move = self.pending[self.cursor]
        self.cursor += 1
        return move


class RemoteB:
    """Blocks the round until a ball is submitted (e.g. by the web UI).

    Illegal submissions are bounced back to the submitter with the
    violation reason and do not consume the turn.
    """

    def __init__(self, config: GameConfig, timeout: float | None = 30.0) -> None:
        self.config = config
        self.timeout = timeout
        self._queue: "queue.Queue[ClosedBall]" = queue.Queue()
        self._transcript: GameTranscript | None = None

    def submit(self, ball: ClosedBall):
        """Validate against the current game position; enqueue when legal."""
        if self._transcript is None:
            raise RuntimeError("no game is waiting for a move")
        bad = validate_move(self._transcript.last_ball, Move("B", ball), self.config)
        if bad is not None:
            return bad
        self._queue.put(ball)
        return None

    def move(self, transcript: GameTranscript) -> Move:
        self._transcript = transcript
        try:
            ball = self._queue.get(timeout=self.timeout)
        except queue.Empty as exc:
            raise RemoteTimeout("no remote move arrived in time") from exc
        return Move("B", ball)


def make_adversary(kind: str, config: GameConfig, b: int, seed: int | None = None):
    if kind == "uniform-random":
        return UniformRandomB(config, seed)
    if kind == "accumulation-seeker":
        return AccumulationSeekerB(config, b)
    if kind == "shrink-burst":
        return ShrinkBurstB(config)
    raise ValueError(f"unknown adversary kind {kind!r}")
