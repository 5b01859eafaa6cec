export async function playMove(api, queue, gameId, token) {
    return queue.run(gameId, () => api.move(gameId, token));
}
/** Issue the tokens in order; resolves to the final state. */
export async function playMoves(api, queue, gameId, tokens, onStep) {
    let last = null;
    for (const token of tokens) {
        last = await playMove(api, queue, gameId, token);
        if (onStep !== undefined) {
            await onStep(last);
        }
    }
    return last;
}
/** Fetch the return path and replay it move by move. */
export async function replaySolution(api, queue, gameId, onStep) {
    const solution = await api.solve(gameId);
    return playMoves(api, queue, gameId, solution.moves, onStep);
}
