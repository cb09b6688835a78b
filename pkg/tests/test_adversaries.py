import threading
from fractions import Fraction as F

import pytest

from luroth.adversaries import (
    AccumulationSeekerB,
    RemoteB,
    RemoteTimeout,
    ReplayB,
    ReplayExhausted,
    ShrinkBurstB,
    UniformRandomB,
    WrongMode,
    make_adversary,
)
from luroth.engine import GameConfig, GameTranscript, Move, play, validate_move, verify_transcript
from luroth.geometry import ClosedBall
from luroth.strategy import ALPHA, PlayerA, constants


def opening(center=F(1, 2), radius=F(1, 4)):
    t = GameTranscript(GameConfig(ALPHA, F(1, 2)))
    t.moves.append(Move("B", ClosedBall.make(center, radius)))
    return t


def test_uniform_random_is_legal_and_deterministic():
    config = GameConfig(ALPHA, F(1, 2), rng_seed=7)
    t = opening()
    moves = [UniformRandomB(config).move(t).ball for _ in range(3)]
    assert moves[0] == moves[1] == moves[2]  # same seed, same move
    for ball in moves:
        assert validate_move(t.last_ball, Move("B", ball), config) is None


def test_uniform_random_strong_mode_varies_radius():
    config = GameConfig(ALPHA, F(1, 2), mode="strong", rng_seed=3)
    t = opening()
    ball = UniformRandomB(config).move(t).ball
    assert F(1, 2) * t.last_ball.radius <= ball.radius <= t.last_ball.radius
    assert validate_move(t.last_ball, Move("B", ball), config) is None


def test_seeker_moves_toward_danger():
    config = GameConfig(ALPHA, F(1, 2))
    b = constants(F(1, 2)).b
    seeker = AccumulationSeekerB(config, b)
    # Previous A ball well inside R_2 = [1/2, 1]: the danger midpoint of the
    # container pulls the next center left of the previous one.
    t = opening(center=F(5, 8), radius=F(1, 16))
    move = seeker.move(t)
    assert validate_move(t.last_ball, move, config) is None
    assert move.ball.center < t.last_ball.center


def test_seeker_legal_through_a_whole_game():
    beta = F(1, 2)
    config = GameConfig(ALPHA, beta, max_rounds=40)
    t = play(
        config,
        PlayerA(beta),
        AccumulationSeekerB(config, constants(beta).b),
        ClosedBall.make(F(1, 2), F(1, 2)),
    )
    assert t.outcome == "completed" and verify_transcript(t) is None


def test_shrink_burst_requires_strong_mode():
    with pytest.raises(WrongMode):
        ShrinkBurstB(GameConfig(ALPHA, F(1, 2)))
    config = GameConfig(ALPHA, F(1, 2), mode="strong")
    burst = ShrinkBurstB(config)
    t = opening()
    first = burst.move(t)
    assert first.ball.radius == F(1, 2) * t.last_ball.radius
    t.moves.append(first)
    second = burst.move(t)
    assert second.ball.radius == F(3, 4) * first.ball.radius


def test_replay_feeds_recorded_moves():
    beta = F(1, 2)
    config = GameConfig(ALPHA, beta, max_rounds=10)
    recorded = play(
        config,
        PlayerA(beta),
        UniformRandomB(config, seed=2),
        ClosedBall.make(F(1, 2), F(1, 4)),
    )
    replayed = play(
        config,
        PlayerA(beta),
        ReplayB(recorded),
        recorded.moves[0].ball,
    )
    assert [m.ball for m in replayed.moves] == [m.ball for m in recorded.moves]
    exhausted = ReplayB(recorded)
    exhausted.cursor = len(exhausted.pending)
    with pytest.raises(ReplayExhausted):
        exhausted.move(recorded)


def test_remote_validates_and_forwards():
    config = GameConfig(ALPHA, F(1, 2))
    remote = RemoteB(config, timeout=5.0)
    t = opening()
    good = ClosedBall.make(F(1, 2), F(1, 8))
    result = {}

    def worker():
        result["move"] = remote.move(t)

    thread = threading.Thread(target=worker)
    thread.start()
    while remote._transcript is None:
        pass
    bad = remote.submit(ClosedBall.make(F(1, 2), F(1, 16)))
    assert bad is not None and bad.reason == "radius-not-equal"
    assert remote.submit(good) is None
    thread.join(timeout=5)
    assert result["move"].ball == good

    fast = RemoteB(config, timeout=0.01)
    with pytest.raises(RemoteTimeout):
        fast.move(t)


def test_make_adversary():
    config = GameConfig(ALPHA, F(1, 2), mode="strong")
    assert isinstance(make_adversary("uniform-random", config, 800), UniformRandomB)
    assert isinstance(make_adversary("accumulation-seeker", config, 800), AccumulationSeekerB)
    assert isinstance(make_adversary("shrink-burst", config, 800), ShrinkBurstB)
    with pytest.raises(ValueError):
        make_adversary("psychic", config, 800)
