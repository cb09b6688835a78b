"""Independent brute-force cross-checks.

Everything here deliberately avoids the production code paths (locate,
left_adjacent, cwg): containment of cylinder elements in a window is decided
by direct digit-range arithmetic on child intervals, so these functions can
serve as oracles for the commensurability engine.
"""

from __future__ import annotations

from fractions import Fraction

from .expansion import LurothElement, child, element, left_adjacent, locate, tail_measure

__all__ = [
    "brute_contains",
    "brute_cwg",
    "commensurate_predicate",
    "tail_identity_holds",
    "window_elements",
    "oracle_suite",
]

ZERO = Fraction(0)
ONE = Fraction(1)


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _ceil(x: Fraction) -> int:
    return -(-x.numerator // x.denominator)


def brute_contains(left: Fraction, right: Fraction, n: int) -> bool:
    """True iff some generation-n element lies inside [left, right].

    Recursive descent over child intervals [p + L/a, p + L/(a-1)] of each
    cylinder [p, p + L]; requires left > 0 so that only finitely many
    branches are explored.
    """
    if not (ZERO < left < right <= ONE):
        raise ValueError("window must satisfy 0 < left < right <= 1")
    l, r = left, right

    def rec(p: Fraction, length: Fraction, k: int) -> bool:
        if k == n:
            return l <= p and p + length <= r
        if p >= r:
            return False
        if p >= l:
            # Children accumulate at p inside the window, so a nested chain
            # of in-window children down to generation n always exists.
            return True
        # p < l: is some child fully inside the window?
        a_min = max(2, _ceil(1 + length / (r - p)))
        a_max = _floor(length / (l - p))
        if a_min <= a_max:
            return True
        if k + 1 == n:
            return False
        # Otherwise only the children straddling l or r can help.
        near_r = max(2, _floor(length / (r - p)) + 1)
        near_l = max(2, _ceil(length / (l - p)))
        seen = set()
        for a in (near_r - 1, near_r, near_r + 1, near_l - 1, near_l, near_l + 1):
            if a < 2 or a in seen:
                continue
            seen.add(a)
            c_left = p + length / a
            c_right = p + length / (a - 1)
            if c_right > l and c_left < r:
                if rec(c_left, length / (a * (a - 1)), k + 1):
                    return True
        return False

    return rec(ZERO, ONE, 0)


def commensurate_predicate(left: Fraction, right: Fraction, n: int) -> bool:
    """The defining predicate: contains generation n but not generation n-1."""
    if n < 1:
        raise ValueError("generation must be >= 1")
    if not brute_contains(left, right, n):
        return False
    if n == 1:
        return True  # the only generation-0 element is X itself, never inside
    return not brute_contains(left, right, n - 1)


def brute_cwg(left: Fraction, right: Fraction, max_n: int = 64) -> int:
    """Smallest n whose generation has an element inside the window."""
    for n in range(1, max_n + 1):
        if brute_contains(left, right, n):
            return n
    raise RuntimeError(f"no contained element up to generation {max_n}")


def tail_identity_holds(e: LurothElement, b: int) -> bool:
    """Sum of child lengths for digits 2..b plus the tail equals |E| exactly."""
    total = sum((child(e, a).length for a in range(2, b + 1)), ZERO)
    return total + tail_measure(e, b) == e.length


def window_elements(
    left: Fraction,
    right: Fraction,
    n: int,
    limit: int = 100,
) -> tuple[list[LurothElement], bool]:
    """Generation-n elements meeting [left, right], right to left, capped.

    Returns (elements, truncated); truncated is True when the cap stopped
    the walk before the window was exhausted (elements accumulate toward
    left endpoints, so a window can meet arbitrarily many).
    """
    if not (ZERO < left < right <= ONE):
        raise ValueError("window must satisfy 0 < left < right <= 1")
    out: list[LurothElement] = []
    e = locate(right, n)
    while e.right > left or not out:
        out.append(e)
        if len(out) >= limit:
            more = left_adjacent(e).right > left
            return out, more
        e = left_adjacent(e)
    return out, False


def oracle_suite(samples: int = 500, seed: int = 0) -> dict:
    """Brute-force cross-check families over random instances; all exact."""
    import random

    from .geometry import ClosedBall
    from .commensurate import cwg
    from .expansion import right_adjacent

    rng = random.Random(seed)
    results = {"cwg_checked": 0, "tail_checked": 0, "adjacency_checked": 0}

    for _ in range(samples):
        den = rng.randrange(64, 1 << 16)
        l = Fraction(rng.randrange(den // 16, den - 2), den)
        width = Fraction(rng.randrange(1, den // 4 + 1), den)
        r = min(l + width, Fraction(den - 1, den))
        if r <= l:
            continue
        ball = ClosedBall.from_endpoints(l, r)
        report = cwg(ball)
        n = report.generation
        if not commensurate_predicate(l, r, n):
            raise AssertionError(f"cwg({l},{r}) = {n} fails the defining predicate")
        for m in range(1, n + 3):
            if m != n and commensurate_predicate(l, r, m):
                raise AssertionError(f"predicate not unique at window [{l},{r}]")
        if len(report.containers) > 2:
            raise AssertionError("more than two containers")
        results["cwg_checked"] += 1

    for _ in range(samples // 2):
        k = rng.randrange(0, 5)
        digits = tuple(rng.randrange(2, 13) for _ in range(k))
        e = element(digits)
        b = rng.randrange(2, 11)
        if not tail_identity_holds(e, b):
            raise AssertionError(f"tail identity fails for {digits}, b={b}")
        results["tail_checked"] += 1

    for _ in range(samples // 2):
        k = rng.randrange(1, 6)
        digits = tuple(rng.randrange(2, 13) for _ in range(k))
        e = element(digits)
        if right_adjacent(left_adjacent(e)) != e:
            raise AssertionError("adjacency involution broken")
        results["adjacency_checked"] += 1

    return results
