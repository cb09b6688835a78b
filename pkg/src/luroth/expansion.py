"""The Lüroth dynamical system over exact rationals.

Digit extraction, series reconstruction, cylinder elements R_{a1...ak},
generation combinatorics (adjacency, accumulation points, locate), and the
tail-measure identity |union of children with digit > b| = |E| / b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import ClosedInterval

__all__ = [
    "NoExpansion",
    "DigitString",
    "LurothElement",
    "luroth_map",
    "first_digit",
    "digits",
    "evaluate",
    "cylinder_length",
    "element",
    "child",
    "left_adjacent",
    "right_adjacent",
    "locate",
    "tail_measure",
]

ZERO = Fraction(0)
ONE = Fraction(1)


class NoExpansion(ValueError):
    """The point 0 (and only it) has no Lüroth expansion."""


@dataclass(frozen=True)
class DigitString:
    """A finite prefix of a Lüroth expansion; every digit is >= 2.

    `terminated` is True when the orbit hit 0 at the end of this prefix,
    i.e. the sequence is the complete finite expansion.
    """

    digits: tuple[int, ...]
    terminated: bool = False

    def __post_init__(self) -> None:
        if any(a < 2 for a in self.digits):
            raise ValueError("every Lüroth digit is >= 2")

    def __len__(self) -> int:
        return len(self.digits)

    def to_json(self) -> dict:
        return {"digits": list(self.digits), "terminated": self.terminated}


@dataclass(frozen=True)
class LurothElement:
    """Cylinder interval R_{a1...ak}; generation = number of digits.

    The empty digit string denotes the generation-0 element X = [0, 1].
    The left endpoint is the accumulation point of the element: children
    tile it from the right end leftward and accumulate there.
    """

    digits: tuple[int, ...]
    interval: ClosedInterval

    @property
    def generation(self) -> int:
        return len(self.digits)

    @property
    def left(self) -> Fraction:
        return self.interval.left

    @property
    def right(self) -> Fraction:
        return self.interval.right

    @property
    def length(self) -> Fraction:
        return self.interval.length

    @property
    def accumulation_point(self) -> Fraction:
        return self.interval.left

    def to_json(self) -> dict:
        return {"digits": list(self.digits), "interval": self.interval.to_json()}


def luroth_map(x: Fraction) -> Fraction:
    """One step of the digit map: T x = n(n+1)x - n on [1/(n+1), 1/n); T 0 = 0."""
    if x == ZERO:
        return ZERO
    if not (ZERO < x < ONE):
        raise ValueError("luroth_map is defined on [0, 1)")
    a = first_digit(x)  # x in [1/a, 1/(a-1)), n = a - 1
    return (a - 1) * a * x - (a - 1)


def first_digit(x: Fraction) -> int:
    """First digit a(x) = n + 1 for x in [1/(n+1), 1/n); equals ceil(1/x)."""
    if not (ZERO < x < ONE):
        raise ValueError("first digit needs x in (0, 1)")
    p, q = x.numerator, x.denominator
    return -(-q // p)


def digits(x: Fraction, max_k: int) -> DigitString:
    """The first min(max_k, expansion length) digits of x in (0, 1)."""
    if x == ZERO:
        raise NoExpansion("0 has no Lüroth expansion")
    if not (ZERO < x < ONE):
        raise ValueError("digits needs x in (0, 1)")
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    out: list[int] = []
    cur = x
    for _ in range(max_k):
        a = first_digit(cur)
        out.append(a)
        cur = (a - 1) * a * cur - (a - 1)
        if cur == ZERO:
            return DigitString(tuple(out), terminated=True)
    return DigitString(tuple(out), terminated=False)


def evaluate(d: DigitString | tuple[int, ...]) -> Fraction:
    """Partial Lüroth series sum_j (prod_{i<j} 1/(a_i(a_i-1))) * (1/a_j).

    For a terminated string this reproduces the original point exactly.
    """
    seq = d.digits if isinstance(d, DigitString) else tuple(d)
    if not seq:
        raise ValueError("evaluate needs a nonempty digit string")
    total = Fraction(0)
    scale = Fraction(1)
    for a in seq:
        total += scale / a
        scale /= a * (a - 1)
    return total


def cylinder_length(seq: tuple[int, ...]) -> Fraction:
    """|R_{a1...ak}| = prod 1/(a_i (a_i - 1))."""
    length = Fraction(1)
    for a in seq:
        length /= a * (a - 1)
    return length


def element(d: DigitString | tuple[int, ...]) -> LurothElement:
    """The closed cylinder interval for a digit string; () gives X = [0, 1]."""
    seq = d.digits if isinstance(d, DigitString) else tuple(d)
    if not seq:
        return LurothElement((), ClosedInterval(ZERO, ONE))
    left = evaluate(seq)
    return LurothElement(tuple(seq), ClosedInterval(left, left + cylinder_length(seq)))


def child(parent: LurothElement, a: int) -> LurothElement:
    """R_{γa} inside R_γ, with |R_{γa}| = |R_γ| / (a(a-1))."""
    if a < 2:
        raise ValueError("child digit must be >= 2")
    return element(parent.digits + (a,))


def left_adjacent(e: LurothElement) -> LurothElement:
    """The unique same-generation element whose right endpoint is e's left."""
    if e.generation < 1:
        raise ValueError("X has no adjacent elements")
    return element(e.digits[:-1] + (e.digits[-1] + 1,))


def right_adjacent(e: LurothElement) -> LurothElement | None:
    """Same-generation right neighbour; absent when the last digit is 2."""
    if e.generation < 1:
        raise ValueError("X has no adjacent elements")
    last = e.digits[-1]
    if last == 2:
        return None
    return element(e.digits[:-1] + (last - 1,))


def locate(x: Fraction, n: int) -> LurothElement:
    """A generation-n element whose closed interval contains x in (0, 1].

    When x is an accumulation point of some generation m < n, the element
    determined by the trailing-2 expansion is returned, so x is its right
    endpoint.  (1, identified with 0, is the right endpoint of R_{2...2}.)
    """
    if n < 1:
        raise ValueError("generation must be >= 1")
    if x == ZERO:
        raise NoExpansion("0 has no Lüroth expansion")
    if x == ONE:
        return element((2,) * n)
    ds = digits(x, n)
    if not ds.terminated:
        return element(ds.digits)
    m = len(ds.digits)
    # x is the accumulation point of R_{a1...am}; switch to the other
    # expansion a1 ... a_{m-1} (a_m + 1) 2 2 2 ..., which has x on the right.
    alt = ds.digits[:-1] + (ds.digits[-1] + 1,) + (2,) * (n - m)
    return element(alt)


def tail_measure(e: LurothElement, b: int) -> Fraction:
    """|union over a > b of R_{γa}| = |E| / b.

    The union occupies [p, p + |E|/b) up to the accumulation point p.
    """
    if b < 2:
        raise ValueError("b must be >= 2")
    return e.length / b
