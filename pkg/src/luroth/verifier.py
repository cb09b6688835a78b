"""Certification of finished games.

A transcript passes when (1) every recorded move is legal, (2) every digit
the limit ball determines beyond the threshold generation stays <= b, and
(3) the limit ball keeps a positive relative cushion above the accumulation
point of every containing element below the threshold.  The verifier reads
only the transcript; it never consults the strategy's internals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import ClosedBall, format_rational
from .expansion import DigitString, digits, element, locate
from .commensurate import cwg
from .engine import GameTranscript, limit_ball, verify_transcript
from .strategy import StrategyConstants

__all__ = ["VerificationReport", "digits_of_ball", "check_bounded"]


@dataclass(frozen=True)
class VerificationReport:
    legal: bool
    threshold_generation: int
    early_cushion: Fraction
    deepest_generation: int
    max_digit_after_threshold: int
    bound: int
    accumulation_case: bool
    verdict: bool
    reasons: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "legal": self.legal,
            "threshold_generation": self.threshold_generation,
            "early_cushion": format_rational(self.early_cushion),
            "deepest_generation": self.deepest_generation,
            "max_digit_after_threshold": self.max_digit_after_threshold,
            "bound": self.bound,
            "accumulation_case": self.accumulation_case,
            "verdict": "pass" if self.verdict else "fail",
            "reasons": list(self.reasons),
        }


def digits_of_ball(ball: ClosedBall) -> DigitString:
    """The longest digit prefix shared by every point of the ball.

    Walks generations downward: at each depth the candidate element is the
    one containing the ball's right endpoint (trailing-2 reading at
    accumulation points); the prefix ends when the candidate no longer
    covers the whole ball.
    """
    if ball.wraps or ball.contains_point(Fraction(0)):
        raise ValueError("ball must avoid the identified point 0~1")
    l, r = ball.left, ball.right
    prefix: tuple[int, ...] = ()
    n = 1
    while True:
        e = locate(r, n)
        if e.left > l or e.right < r:
            return DigitString(prefix, terminated=False)
        prefix = e.digits
        n += 1


def _threshold_generation(transcript: GameTranscript) -> int:
    """The commensurate generation of the first B ball clear of 0~1."""
    for move in transcript.moves:
        if move.player != "B":
            continue
        ball = move.ball
        if not ball.wraps and not ball.contains_point(Fraction(0)):
            return cwg(ball).generation
    raise ValueError("transcript never leaves the opening phase")


def check_bounded(transcript: GameTranscript, consts: StrategyConstants) -> VerificationReport:
    """Digit-boundedness of the limit ball at the depth the game determined."""
    reasons: list[str] = []
    bad = verify_transcript(transcript)
    legal = bad is None
    if not legal:
        reasons.append(f"illegal transcript: {bad.reason} by {bad.player}")

    ball = limit_ball(transcript)
    threshold = _threshold_generation(transcript)
    determined = digits_of_ball(ball)
    depth = len(determined.digits)

    late = determined.digits[threshold:]
    max_late = max(late, default=0)
    if max_late > consts.b:
        reasons.append(
            f"digit {max_late} beyond threshold generation {threshold} exceeds b = {consts.b}"
        )

    # Early generations: relative clearance of the ball above each containing
    # element's accumulation point, certified a posteriori.
    cushion = ball.left  # clearance inside X itself (its accumulation point is 0)
    accumulation_case = False
    for m in range(1, min(threshold, depth) + 1):
        e = element(determined.digits[:m])
        clearance = (ball.left - e.left) / e.length
        if clearance == 0:
            # The limit converges onto an accumulation point; both of its
            # expansions are bounded, so this is not a failure.
            accumulation_case = True
        cushion = min(cushion, clearance)
    if cushion < 0:
        raise AssertionError("ball left endpoint below a containing element")
    if cushion == 0 and not accumulation_case:
        reasons.append("no positive early-generation cushion")

    verdict = legal and max_late <= consts.b and (cushion > 0 or accumulation_case)
    return VerificationReport(
        legal=legal,
        threshold_generation=threshold,
        early_cushion=cushion,
        deepest_generation=depth,
        max_digit_after_threshold=max_late,
        bound=consts.b,
        accumulation_case=accumulation_case,
        verdict=verdict,
        reasons=tuple(reasons),
    )
