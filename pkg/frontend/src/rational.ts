/**
 * Exact rational arithmetic over BigInt, mirroring the server's "p/q" wire
 * format.  Every value is kept reduced with a positive denominator so that
 * equality is structural.
 */

export class Rational {
  readonly num: bigint;
  readonly den: bigint;

  constructor(num: bigint, den: bigint = 1n) {
    if (den === 0n) throw new Error("zero denominator");
    if (den < 0n) {
      num = -num;
      den = -den;
    }
    const g = gcd(num < 0n ? -num : num, den);
    this.num = g === 0n ? 0n : num / g;
    this.den = g === 0n ? 1n : den / g;
  }

  static parse(text: string): Rational {
    const t = text.trim();
    if (!/^-?\d+(\/-?\d+)?$/.test(t)) {
      throw new Error(`not an exact rational "p/q": ${JSON.stringify(text)}`);
    }
    const slash = t.indexOf("/");
    if (slash < 0) return new Rational(BigInt(t));
    return new Rational(BigInt(t.slice(0, slash)), BigInt(t.slice(slash + 1)));
  }

  static fromInt(n: number): Rational {
    if (!Number.isInteger(n)) throw new Error(`not an integer: ${n}`);
    return new Rational(BigInt(n));
  }

  toString(): string {
    return `${this.num}/${this.den}`;
  }

  /** Approximate float value, for drawing only - never for decisions. */
  toNumber(): number {
    return Number(this.num) / Number(this.den);
  }

  add(other: Rational): Rational {
    return new Rational(this.num * other.den + other.num * this.den, this.den * other.den);
  }

  sub(other: Rational): Rational {
    return new Rational(this.num * other.den - other.num * this.den, this.den * other.den);
  }

  mul(other: Rational): Rational {
    return new Rational(this.num * other.num, this.den * other.den);
  }

  div(other: Rational): Rational {
    if (other.num === 0n) throw new Error("division by zero");
    return new Rational(this.num * other.den, this.den * other.num);
  }

  neg(): Rational {
    return new Rational(-this.num, this.den);
  }

  abs(): Rational {
    return this.num < 0n ? this.neg() : this;
  }

  /** -1, 0, or 1 as this compares to other; exact. */
  cmp(other: Rational): number {
    const lhs = this.num * other.den;
    const rhs = other.num * this.den;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
  }

  eq(other: Rational): boolean {
    return this.num === other.num && this.den === other.den;
  }

  lt(other: Rational): boolean {
    return this.cmp(other) < 0;
  }

  le(other: Rational): boolean {
    return this.cmp(other) <= 0;
  }
}

function gcd(a: bigint, b: bigint): bigint {
  while (b !== 0n) {
    [a, b] = [b, a % b];
  }
  return a;
}

export const ZERO = new Rational(0n);
export const ONE = new Rational(1n);
export const HALF = new Rational(1n, 2n);
