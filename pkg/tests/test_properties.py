"""Property tests: exact invariants over randomized rationals and digits."""

from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

from luroth.commensurate import contains_element_of_generation, cwg
from luroth.expansion import (
    child,
    cylinder_length,
    digits,
    element,
    evaluate,
    left_adjacent,
    locate,
    right_adjacent,
    tail_measure,
)
from luroth.geometry import ClosedBall, circle_distance, format_rational, parse_rational
from luroth.oracles import commensurate_predicate


rationals_01 = st.builds(
    lambda n, d: F(n % d or 1, d), st.integers(1, 10**6), st.integers(2, 10**6)
)
digit_strings = st.lists(st.integers(2, 50), min_size=1, max_size=8).map(tuple)


@given(rationals_01)
def test_rational_text_round_trip(x):
    assert parse_rational(format_rational(x)) == x


@given(rationals_01, rationals_01)
def test_circle_distance_symmetric_and_bounded(a, b):
    d = circle_distance(a, b)
    assert 0 <= d <= F(1, 2)
    assert d == circle_distance(b, a)


@given(rationals_01)
def test_expansion_round_trip(x):
    ds = digits(x, 64)
    if ds.terminated:
        assert evaluate(ds) == x
    else:
        # The partial sum is the left endpoint of the containing cylinder.
        e = element(ds.digits)
        assert e.left <= x <= e.right
        assert e.left == evaluate(ds)


@given(digit_strings)
def test_element_geometry(seq):
    e = element(seq)
    assert e.length == cylinder_length(seq)
    assert 0 < e.left < e.right <= 1
    assert e.generation == len(seq)


@given(digit_strings, st.integers(2, 50))
def test_child_partition_with_tail(seq, b):
    e = element(seq)
    covered = sum(child(e, a).length for a in range(2, b + 1))
    assert covered + tail_measure(e, b) == e.length
    assert child(e, 2).right == e.right  # digit-2 child sits flush right


@given(digit_strings)
def test_adjacency_involution(seq):
    e = element(seq)
    la = left_adjacent(e)
    assert la.right == e.left
    assert right_adjacent(la) == e
    ra = right_adjacent(e)
    if ra is not None:
        assert ra.left == e.right
        assert left_adjacent(ra) == e


@given(rationals_01, st.integers(1, 8))
def test_locate_contains_point(x, n):
    e = locate(x, n)
    assert e.generation == n
    assert e.left <= x <= e.right


@settings(max_examples=40, deadline=None)
@given(
    st.integers(2, 10**4),
    st.integers(1, 10**4 - 2),
    st.integers(1, 10**4),
)
def test_cwg_against_brute_force(den, num, width_num):
    l = F(max(num, den // 8), den)
    r = min(l + F(width_num, 4 * den), F(den - 1, den))
    if not (0 < l < r < 1):
        return
    ball = ClosedBall.from_endpoints(l, r)
    report = cwg(ball)
    assert commensurate_predicate(l, r, report.generation)
    assert 1 <= len(report.containers) <= 2


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 10**5), st.integers(1, 10**5))
def test_commensurate_witness_is_contained(den, num):
    l = F(max(num % den, den // 10) or 1, den)
    r = min(l + F(1, 17), F(den - 1, den))
    if not (0 < l < r < 1):
        return
    ball = ClosedBall.from_endpoints(l, r)
    report = cwg(ball)
    w = report.witness
    assert l <= w.left and w.right <= r
    assert (
        report.generation == 1
        or contains_element_of_generation(ball, report.generation - 1) is None
    )
