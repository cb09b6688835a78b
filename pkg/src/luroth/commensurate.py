"""Commensurability of closed balls with Lüroth generations.

A closed ball B (proper, not containing 0) is commensurate with generation
n when it completely contains a generation-n element but no generation-(n-1)
element; that n is unique.  This module computes the unique n together with
a witness element, the one or two generation-(n-1) containers whose union
properly contains B, and the (at most one) accumulation point of generations
<= n-1 inside B.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import ClosedBall, ClosedInterval, Segment
from .expansion import (
    LurothElement,
    digits,
    element,
    left_adjacent,
    locate,
)

__all__ = [
    "NotProper",
    "PointOutside",
    "AccumulationPoint",
    "CommensurateReport",
    "cwg",
    "contains_element_of_generation",
    "accumulation_in",
    "split",
    "danger_interval",
    "DangerInterval",
]

ZERO = Fraction(0)
ONE = Fraction(1)


class NotProper(ValueError):
    """Ball is all of X, wraps, or contains the identified point 0~1."""


class PointOutside(ValueError):
    """Split point does not belong to the ball."""


@dataclass(frozen=True)
class AccumulationPoint:
    point: Fraction
    generation: int
    #: True when the point is the ball's right endpoint and its generation is
    #: strictly below n-1 (the only way such a low-generation point can occur).
    right_endpoint_case: bool = False


@dataclass(frozen=True)
class DangerInterval:
    """The open interval (p, p + |E|/b) occupied by children with digit > b."""

    left: Fraction
    right: Fraction

    @property
    def length(self) -> Fraction:
        return self.right - self.left

    def contains_point(self, x: Fraction) -> bool:
        return self.left < x < self.right

    def disjoint_from(self, left: Fraction, right: Fraction) -> bool:
        """Exact disjointness from the closed interval [left, right]."""
        return right <= self.left or left >= self.right

    def to_json(self) -> list[str]:
        from .geometry import format_rational

        return [format_rational(self.left), format_rational(self.right)]


@dataclass(frozen=True)
class CommensurateReport:
    generation: int
    witness: LurothElement
    containers: tuple[LurothElement, ...]
    accumulation: AccumulationPoint | None


def _ball_window(ball: ClosedBall) -> tuple[Fraction, Fraction]:
    if ball.wraps:
        raise NotProper("wrapping balls are not classified")
    l, r = ball.left, ball.right
    if l <= ZERO or r >= ONE:
        raise NotProper("ball must avoid the identified point 0~1")
    return l, r


def contains_element_of_generation(ball: ClosedBall, n: int) -> LurothElement | None:
    """The rightmost generation-n element inside the ball, if any.

    locate(right, n) is the generation-n element containing the ball's right
    endpoint with maximal right end; if it sticks out, its left-adjacent
    element is the only remaining candidate, because generation-n elements
    tile (0, 1] with matching endpoints.
    """
    l, r = _ball_window(ball)
    e = locate(r, n)
    if e.right > r:
        e = left_adjacent(e)
    if e.left >= l and e.right <= r:
        return e
    return None


def _element_on_right_of(x: Fraction, n: int) -> LurothElement | None:
    """Generation-n element containing [x, x + eps); None when x is an
    accumulation point of generation < n (elements only pile up there)."""
    ds = digits(x, n)
    if ds.terminated and len(ds.digits) < n:
        return None
    return element(ds.digits[:n])


def cwg(ball: ClosedBall) -> CommensurateReport:
    """Classify a ball by the unique generation it is commensurate with."""
    l, r = _ball_window(ball)
    n = 1
    while True:
        witness = contains_element_of_generation(ball, n)
        if witness is not None:
            break
        n += 1

    if n == 1:
        containers: tuple[LurothElement, ...] = (element(()),)
        return CommensurateReport(1, witness, containers, None)

    first = _element_on_right_of(l, n - 1)
    if first is None:
        raise AssertionError("no generation-(n-1) element covers the ball's left end")
    if first.right >= r:
        containers = (first,)
    else:
        second = locate(r, n - 1)
        if second.left != first.right:
            raise AssertionError("containers are not adjacent")
        containers = (first, second)
    union_left = containers[0].left
    union_right = containers[-1].right
    if not (union_left <= l and r <= union_right):
        raise AssertionError("containers do not cover the ball")
    if union_left == l and union_right == r:
        raise AssertionError("containment by containers must be proper")

    acc = accumulation_in(ball, n - 1, containers)
    return CommensurateReport(n, witness, containers, acc)


def accumulation_in(
    ball: ClosedBall,
    up_to_generation: int,
    containers: tuple[LurothElement, ...] | None = None,
) -> AccumulationPoint | None:
    """The unique accumulation point of generations <= up_to_generation in
    the ball, if present.

    Candidates: the shared endpoint of two adjacent containers (interior),
    and the ball's own endpoints when their expansions terminate within
    up_to_generation digits.  More than one candidate would contradict the
    commensurability of the ball, so it is asserted away.
    """
    l, r = _ball_window(ball)
    m = up_to_generation
    candidates: list[AccumulationPoint] = []

    if containers is not None and len(containers) == 2:
        p = containers[1].left
        ds = digits(p, m)
        if not ds.terminated:
            raise AssertionError("container endpoint must be an accumulation point")
        candidates.append(AccumulationPoint(p, len(ds.digits)))

    for point, is_right in ((l, False), (r, True)):
        ds = digits(point, m)
        if ds.terminated:
            gen = len(ds.digits)
            candidates.append(
                AccumulationPoint(point, gen, right_endpoint_case=is_right and gen < m)
            )

    if not candidates:
        return None
    if len({c.point for c in candidates}) > 1:
        raise AssertionError(
            "two accumulation points of low generation in one commensurate ball"
        )
    return candidates[0]


def split(ball: ClosedBall, p: Fraction) -> tuple[Segment, Segment]:
    """Halves (B^l, B^r) = ({x <= p}, {x >= p}); either may be degenerate."""
    l, r = _ball_window(ball)
    if not (l <= p <= r):
        raise PointOutside(f"{p} is not in the ball")
    return Segment(l, p), Segment(p, r)


def danger_interval(e: LurothElement, b: int) -> DangerInterval:
    """The open interval (p, p + |E|/b) below which the next digit exceeds b.

    A point avoiding this interval for every element containing it from some
    generation onward has all later digits <= b (tail-measure identity).
    """
    if b < 2:
        raise ValueError("b must be >= 2")
    p = e.accumulation_point
    return DangerInterval(p, p + e.length / b)
