"""Command-line front end.

All numeric inputs are exact rationals written "p/q" (or bare integers);
floats are rejected by the parser.  Outputs are JSON on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .geometry import ClosedBall, format_rational, parse_rational
from .expansion import digits, element, evaluate, left_adjacent, locate, right_adjacent
from .commensurate import cwg, danger_interval
from .engine import GameConfig, GameTranscript, play
from .strategy import ALPHA, NaivePlayerA, PlayerA, constants
from .adversaries import make_adversary
from .verifier import check_bounded
from .oracles import oracle_suite, window_elements


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational 'p/q': {text!r}") from exc


def _digit_list(text: str) -> tuple[int, ...]:
    try:
        seq = tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad digit list {text!r}") from exc
    if any(a < 2 for a in seq):
        raise argparse.ArgumentTypeError("every digit must be >= 2")
    return seq


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _element_json(e) -> dict:
    return {
        "digits": list(e.digits),
        "interval": e.interval.to_json(),
        "length": format_rational(e.length),
        "generation": e.generation,
    }


def cmd_expand(args) -> int:
    ds = digits(args.x, args.max_k)
    _emit({"digits": list(ds.digits), "terminated": ds.terminated})
    return 0


def cmd_eval(args) -> int:
    _emit({"value": format_rational(evaluate(args.digits))})
    return 0


def cmd_element(args) -> int:
    e = element(args.digits)
    out = _element_json(e)
    out["danger"] = danger_interval(e, args.bound).to_json() if e.digits else None
    left = left_adjacent(e) if e.digits else None
    right = right_adjacent(e) if e.digits else None
    out["left_adjacent"] = list(left.digits) if left else None
    out["right_adjacent"] = list(right.digits) if right else None
    _emit(out)
    return 0


def cmd_cwg(args) -> int:
    if args.left is not None:
        if args.right is None or args.center is not None:
            raise SystemExit("give either --left/--right or --center/--radius")
        ball = ClosedBall.from_endpoints(args.left, args.right)
    else:
        if args.center is None or args.radius is None:
            raise SystemExit("give either --left/--right or --center/--radius")
        ball = ClosedBall.make(args.center, args.radius)
    report = cwg(ball)
    _emit(
        {
            "generation": report.generation,
            "witness": _element_json(report.witness),
            "containers": [_element_json(c) for c in report.containers],
            "accumulation": None
            if report.accumulation is None
            else {
                "point": format_rational(report.accumulation.point),
                "generation": report.accumulation.generation,
                "right_endpoint_case": report.accumulation.right_endpoint_case,
            },
        }
    )
    return 0


def cmd_elements(args) -> int:
    found, truncated = window_elements(args.left, args.right, args.generation, args.max)
    _emit(
        {
            "elements": [
                {**_element_json(e), "danger": danger_interval(e, args.bound).to_json()}
                for e in found
            ],
            "truncated": truncated,
        }
    )
    return 0


def cmd_play(args) -> int:
    config = GameConfig(
        alpha=ALPHA,
        beta=args.beta,
        mode=args.mode,
        max_rounds=args.rounds,
        rng_seed=args.seed,
    )
    consts = constants(args.beta)
    player_a = NaivePlayerA() if args.naive else PlayerA(args.beta)
    player_b = make_adversary(args.adversary, config, consts.b, args.seed)
    initial = ClosedBall.make(args.center, args.radius)

    def deep_enough(t: GameTranscript) -> bool:
        note = t.moves[-1].annotation or {}
        return note.get("cwg", 0) >= args.depth

    transcript = play(config, player_a, player_b, initial, stop=deep_enough)
    if args.out:
        transcript.save(args.out)
    report = check_bounded(transcript, consts)
    _emit(
        {
            "outcome": transcript.outcome,
            "rounds": transcript.rounds(),
            "limit_ball": transcript.last_ball.to_json(),
            "verification": report.to_json(),
            "transcript": args.out,
        }
    )
    return 0 if transcript.outcome == "completed" else 1


def cmd_verify(args) -> int:
    transcript = GameTranscript.load(args.transcript)
    report = check_bounded(transcript, constants(transcript.config.beta))
    _emit(report.to_json())
    return 0 if report.verdict else 1


def cmd_oracles(args) -> int:
    _emit(oracle_suite(samples=args.samples, seed=args.seed))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(args.data_dir), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="luroth",
        description="Exact Lüroth expansions and Schmidt-game strategies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="Lüroth digits of a rational in (0, 1)")
    p.add_argument("x", type=_rational)
    p.add_argument("--max-k", type=int, default=32)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("eval", help="value of a finite digit string")
    p.add_argument("digits", type=_digit_list)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("element", help="cylinder interval of a digit string")
    p.add_argument("digits", type=_digit_list)
    p.add_argument("--bound", type=int, default=800)
    p.set_defaults(func=cmd_element)

    p = sub.add_parser("cwg", help="commensurate generation of a closed ball")
    p.add_argument("--left", type=_rational)
    p.add_argument("--right", type=_rational)
    p.add_argument("--center", type=_rational)
    p.add_argument("--radius", type=_rational)
    p.set_defaults(func=cmd_cwg)

    p = sub.add_parser("elements", help="elements of one generation meeting a window")
    p.add_argument("--left", type=_rational, required=True)
    p.add_argument("--right", type=_rational, required=True)
    p.add_argument("--generation", type=int, required=True)
    p.add_argument("--max", type=int, default=50)
    p.add_argument("--bound", type=int, default=800)
    p.set_defaults(func=cmd_elements)

    p = sub.add_parser("play", help="run a full game against a built-in adversary")
    p.add_argument("--beta", type=_rational, default=Fraction(1, 2))
    p.add_argument("--mode", choices=["winning", "strong"], default="winning")
    p.add_argument("--adversary", default="uniform-random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rounds", type=int, default=200)
    p.add_argument("--depth", type=int, default=12, help="stop once cwg reaches this")
    p.add_argument("--center", type=_rational, default=Fraction(1, 2))
    p.add_argument("--radius", type=_rational, default=Fraction(1, 2))
    p.add_argument("--naive", action="store_true", help="negative-control Player A")
    p.add_argument("--out", help="write the JSON-lines transcript here")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("verify", help="certify a recorded transcript")
    p.add_argument("transcript")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracles", help="brute-force cross-check suite")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracles)

    p = sub.add_parser("serve", help="run the HTTP game service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--data-dir", default="./games")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
