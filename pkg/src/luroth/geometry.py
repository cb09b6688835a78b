"""Exact rational geometry on the circle X = [0,1] with 0 and 1 identified.

Every coordinate, length and radius is a `fractions.Fraction`, so all
predicates here are decided exactly; there is no floating point anywhere
in the engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "OutOfCircle",
    "ClosedBall",
    "ClosedInterval",
    "Segment",
    "parse_rational",
    "format_rational",
    "circle_distance",
]

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


class OutOfCircle(ValueError):
    """Raised when an operation would produce a ball with diameter > 1."""


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or a bare integer "p") into an exact rational."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(x: Fraction) -> str:
    """Canonical "p/q" form with q > 0 (Fraction already reduces)."""
    return f"{x.numerator}/{x.denominator}"


def circle_distance(a: Fraction, b: Fraction) -> Fraction:
    """Distance between two points of the circle [0,1]/0~1."""
    d = abs(a - b) % 1
    return min(d, 1 - d)


@dataclass(frozen=True)
class ClosedInterval:
    """A closed subinterval [left, right] of [0, 1] with left < right."""

    left: Fraction
    right: Fraction

    def __post_init__(self) -> None:
        if not (ZERO <= self.left < self.right <= ONE):
            raise ValueError(f"bad interval [{self.left}, {self.right}]")

    @property
    def length(self) -> Fraction:
        return self.right - self.left

    def contains_point(self, x: Fraction) -> bool:
        return self.left <= x <= self.right

    def contains_interval(self, other: "ClosedInterval") -> bool:
        return self.left <= other.left and other.right <= self.right

    def to_json(self) -> list[str]:
        return [format_rational(self.left), format_rational(self.right)]


@dataclass(frozen=True)
class Segment:
    """A possibly degenerate closed interval; used for ball halves B^l / B^r."""

    left: Fraction
    right: Fraction

    def __post_init__(self) -> None:
        if self.left > self.right:
            raise ValueError("segment endpoints out of order")

    @property
    def length(self) -> Fraction:
        return self.right - self.left


@dataclass(frozen=True)
class ClosedBall:
    """A closed metric ball B(center, radius) on the circle.

    `wraps` is a stored flag: it is True only when the ball crosses the
    identified point 0~1 (i.e. center - radius < 0 or center + radius > 1).
    Balls produced after the strategy's opening move never wrap, so most of
    the engine works with plain interval endpoints.
    """

    center: Fraction
    radius: Fraction
    wraps: bool = False

    def __post_init__(self) -> None:
        if not (ZERO <= self.center < ONE):
            raise ValueError("center must lie in [0, 1)")
        if self.radius <= ZERO or 2 * self.radius > ONE:
            raise ValueError("radius must satisfy 0 < 2*radius <= 1")
        crosses = self.center - self.radius < ZERO or self.center + self.radius > ONE
        if self.wraps != crosses:
            raise ValueError("wraps flag inconsistent with endpoints")

    @classmethod
    def from_endpoints(cls, left: Fraction, right: Fraction) -> "ClosedBall":
        if not (ZERO <= left < right <= ONE):
            raise ValueError("endpoints must satisfy 0 <= left < right <= 1")
        return cls((left + right) / 2, (right - left) / 2)

    @classmethod
    def make(cls, center: Fraction, radius: Fraction) -> "ClosedBall":
        """Build a ball, normalizing the center and inferring `wraps`."""
        center = center % 1
        wraps = center - radius < ZERO or center + radius > ONE
        return cls(center, radius, wraps)

    @property
    def left(self) -> Fraction:
        """Left endpoint; negative when the ball wraps below 0."""
        return self.center - self.radius

    @property
    def right(self) -> Fraction:
        """Right endpoint; greater than 1 when the ball wraps above 1."""
        return self.center + self.radius

    @property
    def diameter(self) -> Fraction:
        return 2 * self.radius

    def contains_point(self, x: Fraction) -> bool:
        """Closed-ball membership in the circle metric."""
        return circle_distance(self.center, x) <= self.radius

    def contains_ball(self, other: "ClosedBall") -> bool:
        """Nested-ball test B' <= B, valid for arcs of length <= 1."""
        return circle_distance(self.center, other.center) <= self.radius - other.radius

    def contains_interval(self, interval: ClosedInterval) -> bool:
        """True iff every point of the interval lies in the ball."""
        if not self.wraps:
            return self.left <= interval.left and interval.right <= self.right
        # Wrapped ball covers [0, right mod 1] and [left mod 1, 1].
        lo = self.left % 1
        hi = self.right % 1
        return interval.right <= hi or interval.left >= lo

    def as_interval(self) -> ClosedInterval:
        if self.wraps:
            raise ValueError("a wrapping ball is not an interval of [0, 1]")
        return ClosedInterval(self.left, self.right)

    def enlarged(self, factor: Fraction) -> "ClosedBall":
        """Same center, radius scaled by `factor` (> 0).

        c1 = 25 in the winning strategy, so the sqrt(c1) = 5 enlargement is
        exact; no irrational arithmetic is ever needed.
        """
        if factor <= ZERO:
            raise ValueError("factor must be positive")
        radius = self.radius * factor
        if 2 * radius > ONE:
            raise OutOfCircle(f"enlarged radius {radius} exceeds 1/2")
        return ClosedBall.make(self.center, radius)

    def to_json(self) -> dict:
        return {
            "center": format_rational(self.center),
            "radius": format_rational(self.radius),
            "wraps": self.wraps,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ClosedBall":
        ball = cls(
            parse_rational(obj["center"]),
            parse_rational(obj["radius"]),
            bool(obj.get("wraps", False)),
        )
        return ball
