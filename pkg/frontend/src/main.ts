/**
 * UI wiring: create a game against the server's Player A, preview and submit
 * B moves, overlay cylinder elements, and export the transcript.
 */

import { GameClient, GameStateJson, MoveRejected } from "./api.js";
import { checkMove, parseBall } from "./legality.js";
import { NumberLineView } from "./number-line.js";
import { Rational } from "./rational.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

const client = new GameClient("");
const view = new NumberLineView(byId<HTMLCanvasElement>("number-line"));

let state: GameStateJson | null = null;

function setStatus(text: string, bad = false): void {
  const el = byId<HTMLElement>("status");
  el.textContent = text;
  el.className = bad ? "status bad" : "status";
}

function suggestRadius(): void {
  if (!state) return;
  const last = state.moves[state.moves.length - 1].ball;
  const beta = Rational.parse(state.config.beta);
  const radius = beta.mul(Rational.parse(last.radius));
  byId<HTMLInputElement>("move-center").value = last.center;
  byId<HTMLInputElement>("move-radius").value = radius.toString();
}

function previewMove(): void {
  if (!state) return;
  const last = state.moves[state.moves.length - 1].ball;
  let verdictText: string;
  let band: { lo: number; hi: number; legal: boolean } | undefined;
  try {
    const prev = parseBall(last.center, last.radius);
    const candidate = parseBall(
      byId<HTMLInputElement>("move-center").value,
      byId<HTMLInputElement>("move-radius").value,
    );
    const verdict = checkMove(prev, candidate, {
      beta: Rational.parse(state.config.beta),
      mode: state.config.mode === "strong" ? "strong" : "winning",
    });
    verdictText = verdict.legal ? "legal" : `illegal: ${verdict.reason}`;
    band = {
      lo: candidate.center.sub(candidate.radius).toNumber(),
      hi: candidate.center.add(candidate.radius).toNumber(),
      legal: verdict.legal,
    };
  } catch (err) {
    verdictText = `unparseable: ${(err as Error).message}`;
  }
  byId<HTMLElement>("preview").textContent = verdictText;
  void redraw(band);
}

async function redraw(preview?: { lo: number; hi: number; legal: boolean }): Promise<void> {
  if (!state) return;
  const last = state.moves[state.moves.length - 1].ball;
  if (byId<HTMLInputElement>("auto-zoom").checked) {
    view.focusOn(Rational.parse(last.center), Rational.parse(last.radius));
  } else {
    view.reset();
  }
  const generation = Number(byId<HTMLInputElement>("overlay-generation").value) || 0;
  let elements: Awaited<ReturnType<GameClient["elements"]>>["elements"] = [];
  if (generation > 0) {
    const lo = Math.max(view.window.lo, 1e-9);
    const hi = Math.min(view.window.hi, 1);
    if (lo < hi) {
      try {
        const body = await client.elements(
          state.id,
          generation,
          floatToRational(lo),
          floatToRational(hi),
        );
        elements = body.elements;
        byId<HTMLElement>("overlay-note").textContent = body.truncated
          ? "(overlay truncated near the accumulation point)"
          : "";
      } catch {
        elements = [];
      }
    }
  }
  view.draw(state.moves, elements, preview);
  byId<HTMLElement>("rounds").textContent = String(state.rounds);
  byId<HTMLElement>("turn").textContent = state.turn;
}

/** Snap a float view bound to an exact nearby rational for the API. */
function floatToRational(x: number): string {
  const den = 1n << 48n;
  const num = BigInt(Math.round(x * Number(den)));
  return new Rational(num, den).toString();
}

async function newGame(): Promise<void> {
  try {
    state = await client.newGame({
      beta: byId<HTMLInputElement>("beta").value,
      mode: byId<HTMLSelectElement>("mode").value,
      center: byId<HTMLInputElement>("init-center").value,
      radius: byId<HTMLInputElement>("init-radius").value,
    });
    setStatus(`game ${state.id}: A answered the opening`);
    suggestRadius();
    await redraw();
  } catch (err) {
    setStatus((err as Error).message, true);
  }
}

async function submitMove(): Promise<void> {
  if (!state) return;
  try {
    state = await client.submitMove(
      state.id,
      byId<HTMLInputElement>("move-center").value,
      byId<HTMLInputElement>("move-radius").value,
    );
    setStatus("move accepted; A replied");
    suggestRadius();
    await redraw();
  } catch (err) {
    if (err instanceof MoveRejected) {
      setStatus(`rejected (${err.rejection.reason}); your turn is preserved`, true);
    } else {
      setStatus((err as Error).message, true);
    }
  }
}

async function verifyGame(): Promise<void> {
  if (!state) return;
  try {
    const report = await client.verify(state.id);
    byId<HTMLElement>("verdict").textContent =
      `${report.verdict}: depth ${report.deepest_generation}, ` +
      `max late digit ${report.max_digit_after_threshold} (bound ${report.bound})` +
      (report.reasons.length ? ` - ${report.reasons.join("; ")}` : "");
  } catch (err) {
    setStatus((err as Error).message, true);
  }
}

async function exportTranscript(): Promise<void> {
  if (!state) return;
  const text = await client.transcript(state.id);
  const blob = new Blob([text], { type: "application/jsonl" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = `game-${state.id}.jsonl`;
  link.click();
  URL.revokeObjectURL(link.href);
}

export function init(): void {
  byId<HTMLButtonElement>("new-game").addEventListener("click", () => void newGame());
  byId<HTMLButtonElement>("submit-move").addEventListener("click", () => void submitMove());
  byId<HTMLButtonElement>("verify").addEventListener("click", () => void verifyGame());
  byId<HTMLButtonElement>("export").addEventListener("click", () => void exportTranscript());
  for (const id of ["move-center", "move-radius"]) {
    byId<HTMLInputElement>(id).addEventListener("input", previewMove);
  }
  for (const id of ["overlay-generation", "auto-zoom"]) {
    byId<HTMLInputElement>(id).addEventListener("change", () => void redraw());
  }
}

if (typeof document !== "undefined" && document.getElementById("number-line")) {
  init();
}
