"""Exact-arithmetic engine for Lüroth expansions and Schmidt games.

Every quantity is a `fractions.Fraction`; the winning strategy, the referee
and the verifier certify their claims with exact comparisons only.
"""

from .geometry import (
    ClosedBall,
    ClosedInterval,
    OutOfCircle,
    Segment,
    circle_distance,
    format_rational,
    parse_rational,
)
from .expansion import (
    DigitString,
    LurothElement,
    NoExpansion,
    child,
    cylinder_length,
    digits,
    element,
    evaluate,
    first_digit,
    left_adjacent,
    locate,
    luroth_map,
    right_adjacent,
    tail_measure,
)
from .commensurate import (
    AccumulationPoint,
    CommensurateReport,
    DangerInterval,
    NotProper,
    accumulation_in,
    contains_element_of_generation,
    cwg,
    danger_interval,
    split,
)
from .engine import (
    GameConfig,
    GameTranscript,
    Move,
    Violation,
    limit_ball,
    play,
    validate_move,
    verify_transcript,
)
from .strategy import (
    ALPHA,
    C1,
    SQRT_C1,
    CertificateFailed,
    NaivePlayerA,
    PlayerA,
    StrategyConstants,
    StrategyInfeasible,
    constants,
)
from .adversaries import (
    AccumulationSeekerB,
    RemoteB,
    ReplayB,
    ShrinkBurstB,
    UniformRandomB,
    make_adversary,
)
from .verifier import VerificationReport, check_bounded, digits_of_ball
from .oracles import brute_contains, brute_cwg, oracle_suite, window_elements

__version__ = "1.0.0"
