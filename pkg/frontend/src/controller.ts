/** Game flows shared by the browser shell and the end-to-end tests.
 *
 * All mutations of one game pass through the queue, so at most one is in
 * flight per game id; every step hands the fresh server state to onStep.
 */
import type { ApiClient, MutationQueue } from "./api.js";
import type { GameJson } from "./types.js";

export async function playMove(
  api: ApiClient,
  queue: MutationQueue,
  gameId: string,
  token: string,
): Promise<GameJson> {
  return queue.run(gameId, () => api.move(gameId, token));
}

/** Issue the tokens in order; resolves to the final state. */
export async function playMoves(
  api: ApiClient,
  queue: MutationQueue,
  gameId: string,
  tokens: readonly string[],
  onStep?: (state: GameJson) => void | Promise<void>,
): Promise<GameJson | null> {
  let last: GameJson | null = null;
  for (const token of tokens) {
    last = await playMove(api, queue, gameId, token);
    if (onStep !== undefined) {
      await onStep(last);
    }
  }
  return last;
}

/** Fetch the return path and replay it move by move. */
export async function replaySolution(
  api: ApiClient,
  queue: MutationQueue,
  gameId: string,
  onStep?: (state: GameJson) => void | Promise<void>,
): Promise<GameJson | null> {
  const solution = await api.solve(gameId);
  return playMoves(api, queue, gameId, solution.moves, onStep);
}
