/**
 * Client-side mirror of the referee's move rules, used for the live
 * legality preview before a ball is submitted.  The server remains the
 * authority; this only predicts its answer, with the same exact arithmetic.
 */

import { ONE, Rational, ZERO } from "./rational.js";

export interface Ball {
  center: Rational;
  radius: Rational;
}

export interface GameRules {
  beta: Rational;
  mode: "winning" | "strong";
}

export function parseBall(center: string, radius: string): Ball {
  const ball = { center: Rational.parse(center), radius: Rational.parse(radius) };
  if (ball.radius.le(ZERO) || ONE.lt(ball.radius.add(ball.radius))) {
    throw new Error("radius must satisfy 0 < 2r <= 1");
  }
  return ball;
}

/** Distance on the circle [0,1]/0~1. */
export function circleDistance(a: Rational, b: Rational): Rational {
  let d = a.sub(b).abs();
  if (ONE.lt(d)) d = d.sub(new Rational(BigInt(Math.floor(d.toNumber()))));
  const wrap = ONE.sub(d);
  return d.le(wrap) ? d : wrap;
}

export interface Verdict {
  legal: boolean;
  reason?: "radius-not-equal" | "radius-too-small" | "not-nested";
}

/** Predict the referee's answer for B's candidate ball inside prev (A's ball). */
export function checkMove(prev: Ball, candidate: Ball, rules: GameRules): Verdict {
  const want = rules.beta.mul(prev.radius);
  if (rules.mode === "winning") {
    if (!candidate.radius.eq(want)) return { legal: false, reason: "radius-not-equal" };
  } else {
    if (candidate.radius.lt(want)) return { legal: false, reason: "radius-too-small" };
    if (prev.radius.lt(candidate.radius)) return { legal: false, reason: "not-nested" };
  }
  const slack = prev.radius.sub(candidate.radius);
  if (slack.lt(circleDistance(prev.center, candidate.center))) {
    return { legal: false, reason: "not-nested" };
  }
  return { legal: true };
}

/** The exact center interval a legal ball of the given radius may use. */
export function legalCenterRange(prev: Ball, radius: Rational): [Rational, Rational] {
  const slack = prev.radius.sub(radius);
  return [prev.center.sub(slack), prev.center.add(slack)];
}
