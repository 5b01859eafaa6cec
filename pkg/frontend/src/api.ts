/** Thin fetch client for the game service.
 *
 * Every mutating request carries a fresh request_id so the service can
 * deduplicate retries, and the MutationQueue keeps at most one mutation
 * in flight per game id.
 */
import type { BallJson, GameJson, SolveJson } from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

function requestId(): string {
  if (typeof crypto !== "undefined" && "randomUUID" in crypto) {
    return crypto.randomUUID();
  }
  return `rq-${Date.now()}-${Math.random().toString(36).slice(2)}`;
}

async function decode<T>(response: Response): Promise<T> {
  const body = await response.json().catch(() => null);
  if (!response.ok) {
    const message =
      body !== null && typeof body === "object" && "error" in body
        ? String((body as { error: unknown }).error)
        : `http ${response.status}`;
    throw new ApiError(response.status, message);
  }
  return body as T;
}

export class ApiClient {
  constructor(readonly base: string = "") {}

  private url(path: string): string {
    return `${this.base}${path}`;
  }

  private async post<T>(path: string, payload: object): Promise<T> {
    const response = await fetch(this.url(path), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
    return decode<T>(response);
  }

  async health(): Promise<{ status: string }> {
    return decode(await fetch(this.url("/api/health")));
  }

  async newGame(scramble: number, seed?: number): Promise<GameJson> {
    const payload: Record<string, unknown> = {
      scramble,
      request_id: requestId(),
    };
    if (seed !== undefined) {
      payload.seed = seed;
    }
    return this.post("/api/game/new", payload);
  }

  async getGame(id: string): Promise<GameJson> {
    return decode(await fetch(this.url(`/api/game/${id}`)));
  }

  async move(id: string, token: string): Promise<GameJson> {
    return this.post(`/api/game/${id}/move`, {
      move: token,
      request_id: requestId(),
    });
  }

  async solve(id: string): Promise<SolveJson> {
    return this.post(`/api/game/${id}/solve`, {});
  }

  async treeBall(radius: number): Promise<BallJson> {
    return decode(await fetch(this.url(`/api/tree/ball?r=${radius}`)));
  }
}

/** Serialises tasks per key: a new task starts only after the previous
 * task for the same key has settled. */
export class MutationQueue {
  private tails = new Map<string, Promise<unknown>>();

  run<T>(key: string, task: () => Promise<T>): Promise<T> {
    const tail = this.tails.get(key) ?? Promise.resolve();
    const next = tail.then(task, task);
    this.tails.set(
      key,
      next.catch(() => undefined),
    );
    return next;
  }

  /** Number of keys with a recorded chain (for tests). */
  get size(): number {
    return this.tails.size;
  }
}
