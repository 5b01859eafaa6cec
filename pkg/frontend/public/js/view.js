import { formatWord, wordDepth } from "./words.js";
export function sameVertex(u, v) {
    return u.a === v.a && u.b === v.b && u.c === v.c;
}
export function findVertexIndex(ball, vertex) {
    if (ball === null) {
        return -1;
    }
    return ball.vertices.findIndex((v) => sameVertex(v, vertex));
}
export function buildView(game, ball, solution, challenge) {
    return {
        game,
        ball,
        solution,
        challenge,
        wordText: formatWord(game.word),
        depth: wordDepth(game.word),
        vertexIndex: findVertexIndex(ball, game.tree_vertex),
    };
}
/** Breadth-first distances from vertices[0] along the ball adjacency. */
export function ballDepths(ball) {
    const depths = new Array(ball.vertices.length).fill(-1);
    depths[0] = 0;
    const queue = [0];
    for (let head = 0; head < queue.length; head += 1) {
        const i = queue[head];
        for (const j of ball.adjacency[i] ?? []) {
            if (depths[j] === -1) {
                depths[j] = depths[i] + 1;
                queue.push(j);
            }
        }
    }
    return depths;
}
/** Breadth-first parent of each vertex (parent of the base is -1). */
export function ballParents(ball) {
    const parents = new Array(ball.vertices.length).fill(-2);
    parents[0] = -1;
    const queue = [0];
    for (let head = 0; head < queue.length; head += 1) {
        const i = queue[head];
        for (const j of ball.adjacency[i] ?? []) {
            if (parents[j] === -2) {
                parents[j] = i;
                queue.push(j);
            }
        }
    }
    return parents;
}
/** Indices on the path from the base to the given vertex, base first. */
export function pathFromBase(ball, index) {
    if (index < 0 || index >= ball.vertices.length) {
        return [];
    }
    const parents = ballParents(ball);
    const path = [];
    for (let i = index; i !== -1; i = parents[i]) {
        path.push(i);
    }
    return path.reverse();
}
