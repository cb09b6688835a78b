from fractions import Fraction as F

import pytest

from luroth.engine import GameConfig, GameTranscript, Move, play
from luroth.expansion import digits
from luroth.geometry import ClosedBall
from luroth.strategy import ALPHA, NaivePlayerA, PlayerA, constants
from luroth.adversaries import AccumulationSeekerB, UniformRandomB
from luroth.verifier import check_bounded, digits_of_ball


def test_digits_of_ball_simple():
    # [2/3, 3/4] is exactly R_23; a slightly smaller interior ball still
    # determines the prefix (2, 3) and nothing deeper than its own extent.
    ball = ClosedBall.from_endpoints(F(27, 40), F(29, 40))
    ds = digits_of_ball(ball)
    assert ds.digits[:2] == (2, 3)
    for point in (ball.left, ball.right, ball.center):
        assert digits(point, len(ds.digits)).digits[: len(ds.digits)] == ds.digits


def test_digits_of_ball_accumulation_right_endpoint():
    # Ball ending exactly at 1/2 inside R_3: prefix follows the trailing-2
    # reading (3, 2, 2, ...).
    ball = ClosedBall.from_endpoints(F(1, 2) - F(1, 100), F(1, 2))
    ds = digits_of_ball(ball)
    assert ds.digits[:2] == (3, 2)
    assert all(a == 2 for a in ds.digits[1:])


def test_digits_of_ball_rejects_wrapping():
    with pytest.raises(ValueError):
        digits_of_ball(ClosedBall.make(F(0), F(1, 8)))


def run_game(player_a, adversary_cls, seed=0, beta=F(1, 2), rounds=60, depth=12):
    config = GameConfig(ALPHA, beta, max_rounds=rounds, rng_seed=seed)
    consts = constants(beta)
    if adversary_cls is AccumulationSeekerB:
        b_player = AccumulationSeekerB(config, consts.b)
    else:
        b_player = adversary_cls(config, seed)
    t = play(
        config,
        player_a,
        b_player,
        ClosedBall.make(F(1, 2), F(1, 2)),
        stop=lambda tr: (tr.moves[-1].annotation or {}).get("cwg", 0) >= depth,
    )
    return t, consts


def test_winning_game_verifies():
    t, consts = run_game(PlayerA(F(1, 2)), UniformRandomB, seed=4)
    report = check_bounded(t, consts)
    assert report.verdict and report.legal
    assert report.max_digit_after_threshold <= consts.b
    assert report.early_cushion > 0 or report.accumulation_case
    assert report.to_json()["verdict"] == "pass"


def test_mutated_transcript_fails_legality():
    t, consts = run_game(PlayerA(F(1, 2)), UniformRandomB, seed=4)
    idx = next(i for i, m in enumerate(t.moves) if m.player == "A")
    ball = t.moves[idx].ball
    t.moves[idx] = Move("A", ClosedBall.make(ball.center, ball.radius * F(99, 100)))
    report = check_bounded(t, consts)
    assert not report.legal and not report.verdict
    assert any("illegal" in r for r in report.reasons)


def test_naive_play_fails_digit_bound():
    t, consts = run_game(NaivePlayerA(), AccumulationSeekerB, rounds=50, depth=10**9)
    report = check_bounded(t, consts)
    assert not report.verdict
    assert report.max_digit_after_threshold > consts.b


def test_verifier_requires_main_phase():
    config = GameConfig(ALPHA, F(1, 2))
    t = GameTranscript(config)
    t.moves.append(Move("B", ClosedBall.make(F(1, 2), F(1, 2))))
    with pytest.raises(ValueError):
        check_bounded(t, constants(F(1, 2)))
