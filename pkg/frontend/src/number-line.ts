/**
 * Canvas view of the unit interval: the nested game balls, the cylinder
 * elements of a chosen generation, and their danger intervals.  Rationals
 * are converted to floats at the last moment, purely for pixel placement.
 */

import { ElementJson, MoveJson } from "./api.js";
import { Rational } from "./rational.js";

export interface ViewWindow {
  lo: number;
  hi: number;
}

const BALL_COLORS: Record<string, string> = { A: "#2563eb", B: "#dc2626" };

export class NumberLineView {
  window: ViewWindow = { lo: 0, hi: 1 };

  constructor(private readonly canvas: HTMLCanvasElement) {}

  private toX(value: number): number {
    const { lo, hi } = this.window;
    return ((value - lo) / (hi - lo)) * this.canvas.width;
  }

  /** Zoom so the given ball fills the middle 60% of the view. */
  focusOn(center: Rational, radius: Rational): void {
    const c = center.toNumber();
    const r = Math.max(radius.toNumber(), 1e-12);
    this.window = { lo: c - r / 0.6, hi: c + r / 0.6 };
  }

  reset(): void {
    this.window = { lo: 0, hi: 1 };
  }

  draw(moves: MoveJson[], elements: ElementJson[], preview?: { lo: number; hi: number; legal: boolean }): void {
    const ctx = this.canvas.getContext("2d");
    if (!ctx) return;
    const { width, height } = this.canvas;
    ctx.clearRect(0, 0, width, height);

    // Axis.
    const axisY = height - 24;
    ctx.strokeStyle = "#374151";
    ctx.beginPath();
    ctx.moveTo(this.toX(0), axisY);
    ctx.lineTo(this.toX(1), axisY);
    ctx.stroke();
    ctx.fillStyle = "#374151";
    ctx.font = "11px sans-serif";
    for (const t of [0, 0.25, 0.5, 0.75, 1]) {
      const x = this.toX(t);
      if (x < -20 || x > width + 20) continue;
      ctx.beginPath();
      ctx.moveTo(x, axisY - 4);
      ctx.lineTo(x, axisY + 4);
      ctx.stroke();
      ctx.fillText(String(t), x - 8, axisY + 16);
    }

    // Cylinder elements with their danger intervals.
    const elemY = axisY - 18;
    for (const e of elements) {
      const lo = Rational.parse(e.interval[0]).toNumber();
      const hi = Rational.parse(e.interval[1]).toNumber();
      ctx.fillStyle = "rgba(16, 185, 129, 0.25)";
      ctx.fillRect(this.toX(lo), elemY, Math.max(this.toX(hi) - this.toX(lo), 1), 10);
      const dLo = Rational.parse(e.danger[0]).toNumber();
      const dHi = Rational.parse(e.danger[1]).toNumber();
      ctx.fillStyle = "rgba(220, 38, 38, 0.6)";
      ctx.fillRect(this.toX(dLo), elemY, Math.max(this.toX(dHi) - this.toX(dLo), 1), 10);
    }

    // Nested balls, newest drawn last and thickest.
    moves.forEach((move, index) => {
      const center = Rational.parse(move.ball.center).toNumber();
      const radius = Rational.parse(move.ball.radius).toNumber();
      const y = 20 + index * 6;
      if (y > elemY - 10) return;
      ctx.strokeStyle = BALL_COLORS[move.player] ?? "#6b7280";
      ctx.lineWidth = index === moves.length - 1 ? 3 : 1.5;
      ctx.beginPath();
      ctx.moveTo(this.toX(center - radius), y);
      ctx.lineTo(this.toX(center + radius), y);
      ctx.stroke();
      if (move.ball.wraps) {
        // Indicate that the arc continues across 0 ~ 1.
        ctx.setLineDash([2, 3]);
        ctx.beginPath();
        ctx.moveTo(this.toX(center - radius + 1), y);
        ctx.lineTo(this.toX(center + radius + 1), y);
        ctx.stroke();
        ctx.setLineDash([]);
      }
    });
    ctx.lineWidth = 1;

    // Candidate-move preview band.
    if (preview) {
      ctx.fillStyle = preview.legal ? "rgba(37, 99, 235, 0.2)" : "rgba(220, 38, 38, 0.2)";
      ctx.fillRect(
        this.toX(preview.lo),
        0,
        Math.max(this.toX(preview.hi) - this.toX(preview.lo), 2),
        axisY - 24,
      );
    }
  }
}
