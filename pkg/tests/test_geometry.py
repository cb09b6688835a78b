from fractions import Fraction as F

import pytest

from luroth.geometry import (
    ClosedBall,
    ClosedInterval,
    OutOfCircle,
    Segment,
    circle_distance,
    format_rational,
    parse_rational,
)


def test_parse_and_format_round_trip():
    assert parse_rational("5/12") == F(5, 12)
    assert parse_rational(" -3/4 ") == F(-3, 4)
    assert parse_rational("7") == F(7)
    assert format_rational(F(10, 24)) == "5/12"
    assert format_rational(F(3)) == "3/1"


def test_parse_rejects_floats():
    with pytest.raises(ValueError):
        parse_rational("0.5")


def test_circle_distance_wraps():
    assert circle_distance(F(1, 10), F(9, 10)) == F(1, 5)
    assert circle_distance(F(1, 4), F(3, 4)) == F(1, 2)
    assert circle_distance(F(0), F(1)) == 0


def test_ball_endpoints_and_containment():
    b = ClosedBall.make(F(1, 2), F(1, 4))
    assert (b.left, b.right) == (F(1, 4), F(3, 4))
    assert not b.wraps
    assert b.contains_point(F(1, 4)) and b.contains_point(F(3, 4))
    assert not b.contains_point(F(4, 5))
    assert b.contains_ball(ClosedBall.make(F(1, 2), F(1, 4)))
    assert not b.contains_ball(ClosedBall.make(F(3, 4), F(1, 8)))


def test_wrapping_ball():
    b = ClosedBall.make(F(1, 16), F(1, 8))
    assert b.wraps
    assert b.contains_point(F(0)) and b.contains_point(F(31, 32))
    assert not b.contains_point(F(1, 2))
    with pytest.raises(ValueError):
        b.as_interval()
    # The stored flag must match the endpoints.
    with pytest.raises(ValueError):
        ClosedBall(F(1, 16), F(1, 8), wraps=False)
    with pytest.raises(ValueError):
        ClosedBall(F(1, 2), F(1, 8), wraps=True)


def test_ball_radius_bounds():
    with pytest.raises(ValueError):
        ClosedBall.make(F(1, 2), F(0))
    with pytest.raises(ValueError):
        ClosedBall.make(F(1, 2), F(2, 3))
    # Radius exactly 1/2 covers the whole circle and is allowed.
    ClosedBall.make(F(1, 2), F(1, 2))


def test_enlarged_exact_and_overflow():
    b = ClosedBall.make(F(1, 2), F(1, 100))
    assert b.enlarged(F(5)).radius == F(1, 20)
    with pytest.raises(OutOfCircle):
        ClosedBall.make(F(1, 2), F(1, 8)).enlarged(F(32))
    with pytest.raises(ValueError):
        b.enlarged(F(0))


def test_ball_json_round_trip():
    b = ClosedBall.make(F(15, 16), F(1, 8))
    assert ClosedBall.from_json(b.to_json()) == b
    assert b.to_json() == {"center": "15/16", "radius": "1/8", "wraps": True}


def test_interval_and_segment():
    i = ClosedInterval(F(1, 3), F(2, 3))
    assert i.length == F(1, 3)
    assert i.contains_interval(ClosedInterval(F(1, 3), F(1, 2)))
    with pytest.raises(ValueError):
        ClosedInterval(F(2, 3), F(1, 3))
    assert Segment(F(1, 2), F(1, 2)).length == 0
    with pytest.raises(ValueError):
        Segment(F(2, 3), F(1, 3))
