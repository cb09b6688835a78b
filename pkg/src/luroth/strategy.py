"""Player A's winning strategy.

The strategy keeps the radius at exactly alpha * rho(B) in both game
variants (alpha = 1/8).  It opens by dodging the identified point 0, then
classifies every incoming ball by its commensurate generation.  While the
generation is unchanged it plays concentric "interim" balls; at each
generation jump it dispatches into one of three placement cases that keep
the game away from the danger intervals (p, p + |E|/b), certifying the
required size and disjointness facts in exact arithmetic as it goes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import ClosedBall, format_rational
from .expansion import LurothElement, child, element
from .commensurate import (
    CommensurateReport,
    DangerInterval,
    cwg,
    danger_interval,
)
from .engine import GameTranscript, Move

__all__ = [
    "StrategyInfeasible",
    "CertificateFailed",
    "StrategyConstants",
    "constants",
    "PlayerA",
    "NaivePlayerA",
]

ALPHA = Fraction(1, 8)
C1 = 25
SQRT_C1 = 5


class StrategyInfeasible(RuntimeError):
    """No legal placement satisfies the case's disjointness constraints.

    Firing would falsify the implementation, not the underlying result.
    """


class CertificateFailed(RuntimeError):
    """An exact runtime certificate did not hold; aborts the game."""


@dataclass(frozen=True)
class StrategyConstants:
    alpha: Fraction
    beta: Fraction
    c1: int
    sqrt_c1: int
    b: int


def constants(beta: Fraction) -> StrategyConstants:
    """alpha = 1/8 fixed; b = ceil(2 * c1 / (alpha * beta)), exact ceiling."""
    if not (0 < beta < 1):
        raise ValueError("beta must lie in (0, 1)")
    ratio = Fraction(2 * C1) / (ALPHA * beta)
    b = -(-ratio.numerator // ratio.denominator)
    return StrategyConstants(ALPHA, beta, C1, SQRT_C1, b)


@dataclass
class StrategyState:
    """Player A's bookkeeping across a single game."""

    b0_radius: Fraction | None = None
    g1: int | None = None  # threshold generation fixed at the first jump
    g: int | None = None  # commensurate generation of current play
    pending_jump: bool = False  # set after a Case-2 move: next ball is a jump
    jump_generations: list[int] = field(default_factory=list)
    rounds_in_generation: int = 0
    j_list: list[int] = field(default_factory=list)


class PlayerA:
    """Move supplier implementing the constructive winning strategy.

    cushion_mode selects how the protective gap above an accumulation point
    is sized at generation jumps after the first: "paper" uses the danger
    interval of the surrounding element, "b0" reuses the fixed radius
    rho(B0)/b from the first jump at every jump.
    """

    def __init__(self, beta: Fraction, cushion_mode: str = "paper") -> None:
        if cushion_mode not in ("paper", "b0"):
            raise ValueError("cushion_mode must be 'paper' or 'b0'")
        self.consts = constants(beta)
        self.cushion_mode = cushion_mode
        self.state = StrategyState()

    # -- entry point -------------------------------------------------------

    def move(self, transcript: GameTranscript) -> Move:
        ball = transcript.last_ball
        if ball.wraps or ball.contains_point(Fraction(0)):
            return self._preamble_move(ball)
        return self._main_move(ball)

    # -- opening -----------------------------------------------------------

    def _preamble_move(self, ball: ClosedBall) -> Move:
        """Place A inside B, clear of the identified point 0~1.

        Work in lifted coordinates [center - r, center + r] and split the
        arc at the integer points it covers; the midpoint of the largest
        piece keeps a clearance of at least alpha * r on both sides.
        """
        lo, hi = ball.left, ball.right
        cuts = sorted({z for z in (0, 1) if lo <= z <= hi})
        stops = [lo] + [Fraction(z) for z in cuts if lo < z < hi] + [hi]
        best_l, best_r = max(zip(stops, stops[1:]), key=lambda s: (s[1] - s[0], s[0]))
        radius = ALPHA * ball.radius
        reply = ClosedBall.make((best_l + best_r) / 2, radius)
        if reply.contains_point(Fraction(0)) or not ball.contains_ball(reply):
            raise StrategyInfeasible("opening placement failed")
        return Move("A", reply, {"case": "preamble"})

    # -- main phase --------------------------------------------------------

    def _main_move(self, ball: ClosedBall) -> Move:
        report = cwg(ball)
        g_new = report.generation
        st = self.state
        if st.g is None:
            st.g1 = g_new
            st.b0_radius = Fraction(self.consts.b, self.consts.c1) * ball.radius
            return self._jump_move(ball, report, initial=True)
        if st.pending_jump or g_new > st.g:
            return self._jump_move(ball, report, initial=False)
        if g_new == st.g:
            st.rounds_in_generation += 1
            reply = ClosedBall.make(ball.center, ALPHA * ball.radius)
            return Move("A", reply, {"case": "interim", "cwg": g_new})
        raise AssertionError("commensurate generation decreased along nested balls")

    # -- generation jumps --------------------------------------------------

    def _jump_move(self, ball: ClosedBall, report: CommensurateReport, initial: bool) -> Move:
        st = self.state
        from_case2 = st.pending_jump
        certs = self._jump_certificates(ball, report, initial, from_case2)

        acc = report.accumulation
        if acc is None:
            case_tag, reply, extra = self._case3(ball, report, initial)
        else:
            p = acc.point
            if ball.right - p >= p - ball.left:
                case_tag, reply, extra = self._case1(ball, report, p, initial)
            else:
                case_tag, reply, extra = self._case2(ball, report, p)

        st.j_list.append(st.rounds_in_generation + 1)
        st.rounds_in_generation = 0
        st.jump_generations.append(report.generation)
        if case_tag == "case2":
            # The reply ball itself sits deep in the trailing-2 chain; the
            # next ball is a jump no matter what generation it lands on.
            st.g = extra["reply_cwg"]
            st.pending_jump = True
        else:
            st.g = report.generation
            st.pending_jump = False

        annotation = {
            "case": case_tag,
            "cwg": report.generation,
            "initial": initial,
            "danger": [danger_interval(c, self.consts.b).to_json() for c in report.containers],
            "certificates": certs,
        }
        annotation.update(extra)
        return Move("A", reply, annotation)

    def _cushion(self, surrounding: LurothElement, initial: bool) -> Fraction:
        if initial or self.cushion_mode == "b0":
            assert self.state.b0_radius is not None
            return self.state.b0_radius / self.consts.b
        return surrounding.length / self.consts.b

    def _place_in(self, lo: Fraction, hi: Fraction, radius: Fraction) -> ClosedBall:
        """Center a radius-`radius` ball strictly inside (lo, hi)."""
        if hi - lo <= 2 * radius:
            raise StrategyInfeasible(
                f"feasible region [{lo}, {hi}] shorter than required diameter {2 * radius}"
            )
        return ClosedBall.make((lo + hi) / 2, radius)

    def _container_with_left(self, report: CommensurateReport, p: Fraction) -> LurothElement:
        for c in report.containers:
            if c.left == p:
                return c
        raise AssertionError("no container has the accumulation point as left endpoint")

    def _case1(
        self,
        ball: ClosedBall,
        report: CommensurateReport,
        p: Fraction,
        initial: bool,
    ) -> tuple[str, ClosedBall, dict]:
        """Accumulation point present, right half at least as long as left.

        A goes into B^r, above the protective cushion over p, strictly below
        the left endpoint q of R_{gamma 2}; that keeps it inside the interior
        of R_gamma and clear of every other element of its generation.
        """
        acc = report.accumulation
        assert acc is not None
        if acc.generation != report.generation - 1:
            raise AssertionError("case-1 accumulation point must have generation n-1")
        r_gamma = self._container_with_left(report, p)
        q = p + r_gamma.length / 2  # left endpoint of R_{gamma 2}
        cushion = self._cushion(r_gamma, initial)
        radius = ALPHA * ball.radius
        lo = max(ball.left, p + cushion)
        hi = min(ball.right, q)
        reply = self._place_in(lo, hi, radius)
        if not initial:
            if not danger_interval(r_gamma, self.consts.b).disjoint_from(reply.left, reply.right):
                raise CertificateFailed("case-1 reply touches the danger interval")
        extra = {
            "p": format_rational(p),
            "q": format_rational(q),
            "cushion": format_rational(cushion),
            "feasible": [format_rational(lo), format_rational(hi)],
            "subcase": "inside" if ball.right < q else "straddles-q",
        }
        return "case1", reply, extra

    def _case2(
        self,
        ball: ClosedBall,
        report: CommensurateReport,
        p: Fraction,
    ) -> tuple[str, ClosedBall, dict]:
        """Left half longer: A is the closed ball with right endpoint exactly p.

        Post-hoc exact checks: A sits inside R_{gamma 2}, clear of its danger
        interval, and is sandwiched in the trailing-2 chain
        R_{gamma 2 ~2...2 2} inside A inside R_{gamma 2 ~2...2}.
        """
        r_gamma = next((c for c in report.containers if c.right == p), None)
        if r_gamma is None:
            raise AssertionError("no container has the accumulation point as right endpoint")
        radius = ALPHA * ball.radius
        reply = ClosedBall.make(p - radius, radius)
        if reply.left < ball.left:
            raise StrategyInfeasible("case-2 ball does not fit in the left half")
        r_gamma2 = child(r_gamma, 2)
        if not (r_gamma2.left <= reply.left and reply.right <= r_gamma2.right):
            raise CertificateFailed("case-2 reply not inside R_{gamma 2}")
        if reply.left < r_gamma2.left + r_gamma2.length / self.consts.b:
            raise CertificateFailed("case-2 reply touches the danger interval of R_{gamma 2}")
        reply_report = cwg(reply)
        g_a = reply_report.generation
        if g_a <= report.generation:
            raise AssertionError("case-2 reply must be commensurate beyond the current generation")
        outer = element(r_gamma2.digits + (2,) * (g_a - 1 - r_gamma2.generation))
        inner = child(outer, 2)
        if not (outer.left <= reply.left and inner.left >= reply.left):
            raise CertificateFailed("case-2 trailing-2 sandwich violated")
        if not reply.diameter > inner.length:
            raise CertificateFailed("case-2 reply not longer than the inner trailing-2 element")
        extra = {
            "p": format_rational(p),
            "reply_cwg": g_a,
            "trailing2": list(outer.digits),
        }
        return "case2", reply, extra

    def _case3(
        self,
        ball: ClosedBall,
        report: CommensurateReport,
        initial: bool,
    ) -> tuple[str, ClosedBall, dict]:
        """No accumulation point in B: the ball sits in the interior of a
        single element of the previous generation; play as in case 1 with the
        whole ball standing in for B^r."""
        if len(report.containers) != 1:
            raise AssertionError("case-3 ball must have a single container")
        r_gamma = report.containers[0]
        p = r_gamma.left
        if p >= ball.left:
            raise AssertionError("case-3 accumulation point must lie left of the ball")
        if report.witness.digits[-1] == 2:
            raise AssertionError("case-3 witness cannot end in digit 2")
        q = p + r_gamma.length / 2
        if ball.right >= q:
            # B contains q, hence all of R_{gamma 3}.
            r_gamma3 = child(r_gamma, 3)
            if not (ball.left <= r_gamma3.left and r_gamma3.right <= ball.right):
                raise CertificateFailed("case-3 straddling ball must contain R_{gamma 3}")
            if 6 * ball.diameter < r_gamma.length:
                raise CertificateFailed("case-3 ball smaller than |R_gamma|/6")
        cushion = self._cushion(r_gamma, initial)
        radius = ALPHA * ball.radius
        lo = max(ball.left, p + cushion)
        hi = min(ball.right, q)
        reply = self._place_in(lo, hi, radius)
        if not initial:
            if not danger_interval(r_gamma, self.consts.b).disjoint_from(reply.left, reply.right):
                raise CertificateFailed("case-3 reply touches the danger interval")
        extra = {
            "p": format_rational(p),
            "q": format_rational(q),
            "cushion": format_rational(cushion),
            "feasible": [format_rational(lo), format_rational(hi)],
            "subcase": "inside" if ball.right < q else "straddles-q",
        }
        return "case3", reply, extra

    # -- certificates ------------------------------------------------------

    def _jump_certificates(
        self,
        ball: ClosedBall,
        report: CommensurateReport,
        initial: bool,
        from_case2: bool,
    ) -> dict:
        """Exact size and disjointness facts asserted at a generation jump.

        (a) the ball's diameter beats (sqrt(c1)/b)|E| for every element E of
            generations between the previous and new jump that meets the
            ball; (b) the ball is disjoint from every danger interval of
            generations between the threshold and g_new - 2; (c) the ball is
            at least sqrt(c1)/2 times the total danger length it must avoid.
        """
        if initial:
            return {"initial": True}
        st = self.state
        b = self.consts.b
        g_new = report.generation
        l, r = ball.left, ball.right
        diam = ball.diameter

        dangers = [danger_interval(c, b) for c in report.containers]
        total = sum((d.length for d in dangers), Fraction(0))
        margin = diam / total
        if margin < Fraction(SQRT_C1, 2):
            raise CertificateFailed(
                f"jump margin {margin} below {SQRT_C1}/2 at generation {g_new}"
            )

        assert st.g1 is not None and st.g is not None
        lower_checked = 0
        prefixes = {c.digits[:g] for c in report.containers for g in range(st.g1, g_new - 1)}
        for pref in prefixes:
            d = danger_interval(element(pref), b)
            lower_checked += 1
            if not d.disjoint_from(l, r):
                raise CertificateFailed(
                    f"ball meets a generation-{len(pref)} danger interval at a jump"
                )

        chain_checked = 0
        chain = {c.digits[:g] for c in report.containers for g in range(st.g, g_new)}
        for pref in chain:
            e = element(pref)
            if e.right > l and e.left < r:  # interior meets the ball
                chain_checked += 1
                if not diam * b > SQRT_C1 * e.length:
                    raise CertificateFailed(
                        f"ball diameter not above (sqrt(c1)/b)|E| for generation {len(pref)}"
                    )

        return {
            "margin": format_rational(margin),
            "lower_generation_intervals": lower_checked,
            "chain_elements": chain_checked,
            "from_case2": from_case2,
        }


class NaivePlayerA:
    """Negative-control strategy: always the concentric ball of legal radius.

    Makes no attempt to dodge danger intervals; adversaries can steer the
    limit point to arbitrarily large digits against it.
    """

    def __init__(self, alpha: Fraction = ALPHA) -> None:
        self.alpha = alpha

    def move(self, transcript: GameTranscript) -> Move:
        ball = transcript.last_ball
        return Move("A", ClosedBall.make(ball.center, self.alpha * ball.radius), {"case": "naive"})
