/**
 * Typed client for the game service's HTTP interface.  All numbers cross
 * the wire as exact "p/q" strings; nothing is converted to float here.
 */

export interface BallJson {
  center: string;
  radius: string;
  wraps: boolean;
}

export interface MoveJson {
  player: "A" | "B";
  ball: BallJson;
  annotation?: Record<string, unknown>;
}

export interface GameStateJson {
  id: string;
  config: { alpha: string; beta: string; mode: string; max_rounds: number };
  bound: number;
  turn: "A" | "B";
  rounds: number;
  outcome: string;
  moves: MoveJson[];
}

export interface ElementJson {
  digits: number[];
  interval: [string, string];
  length: string;
  danger: [string, string];
}

export interface ElementsJson {
  generation: number;
  elements: ElementJson[];
  truncated: boolean;
}

export interface VerificationJson {
  legal: boolean;
  threshold_generation: number;
  early_cushion: string;
  deepest_generation: number;
  max_digit_after_threshold: number;
  bound: number;
  accumulation_case: boolean;
  verdict: "pass" | "fail";
  reasons: string[];
}

export interface RejectionDetail {
  reason: string;
  player?: string;
  detail?: string;
}

/** Thrown when the server answers 422: the move was rejected, turn preserved. */
export class MoveRejected extends Error {
  constructor(readonly rejection: RejectionDetail) {
    super(`move rejected: ${rejection.reason}`);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class GameClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (response.status === 422) {
      const body = await response.json();
      throw new MoveRejected(
        typeof body.detail === "string" ? { reason: body.detail } : body.detail,
      );
    }
    if (!response.ok) {
      throw new Error(`${init?.method ?? "GET"} ${path}: HTTP ${response.status}`);
    }
    return response.json() as Promise<T>;
  }

  newGame(options: {
    beta: string;
    mode?: string;
    center?: string;
    radius?: string;
    naive?: boolean;
  }): Promise<GameStateJson> {
    return this.request("/games", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(options),
    });
  }

  getGame(id: string): Promise<GameStateJson> {
    return this.request(`/games/${id}`);
  }

  /** Submit B's ball; resolves to the updated state (with A's reply) or
   * rejects with MoveRejected when the referee refuses it. */
  submitMove(id: string, center: string, radius: string): Promise<GameStateJson> {
    return this.request(`/games/${id}/move`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ center, radius }),
    });
  }

  elements(
    id: string,
    generation: number,
    left: string,
    right: string,
    max = 50,
  ): Promise<ElementsJson> {
    const query = new URLSearchParams({
      generation: String(generation),
      left,
      right,
      max: String(max),
    });
    return this.request(`/games/${id}/elements?${query}`);
  }

  verify(id: string): Promise<VerificationJson> {
    return this.request(`/games/${id}/verify`, { method: "POST" });
  }

  async transcript(id: string): Promise<string> {
    const response = await this.fetchFn(`${this.baseUrl}/games/${id}/transcript`);
    if (!response.ok) throw new Error(`transcript: HTTP ${response.status}`);
    return response.text();
  }
}
