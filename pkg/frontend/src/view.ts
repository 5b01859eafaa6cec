/** The client view model: a pure function of the last server responses.
 *
 * Nothing here multiplies group elements.  The pose, history, word and
 * tree vertex are taken verbatim from the service; the view only adds
 * lookups (which ball vertex matches) and formatting.
 */
import type { BallJson, GameJson, TreeVertexJson } from "./types.js";
import { formatWord, wordDepth } from "./words.js";

export interface ClientGameView {
  readonly game: GameJson;
  readonly ball: BallJson | null;
  /** the revealed return path, or null while hidden (reveal is opt-in) */
  readonly solution: readonly string[] | null;
  /** challenge mode hides history, word and solver */
  readonly challenge: boolean;
  /** the reduced word as the service prints it */
  readonly wordText: string;
  /** tree depth of the current word (= number of free letters) */
  readonly depth: number;
  /** index of the current vertex in ball.vertices, or -1 when outside */
  readonly vertexIndex: number;
}

export function sameVertex(u: TreeVertexJson, v: TreeVertexJson): boolean {
  return u.a === v.a && u.b === v.b && u.c === v.c;
}

export function findVertexIndex(
  ball: BallJson | null,
  vertex: TreeVertexJson,
): number {
  if (ball === null) {
    return -1;
  }
  return ball.vertices.findIndex((v) => sameVertex(v, vertex));
}

export function buildView(
  game: GameJson,
  ball: BallJson | null,
  solution: readonly string[] | null,
  challenge: boolean,
): ClientGameView {
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
export function ballDepths(ball: BallJson): number[] {
  const depths = new Array<number>(ball.vertices.length).fill(-1);
  depths[0] = 0;
  const queue = [0];
  for (let head = 0; head < queue.length; head += 1) {
    const i = queue[head]!;
    for (const j of ball.adjacency[i] ?? []) {
      if (depths[j] === -1) {
        depths[j] = depths[i]! + 1;
        queue.push(j);
      }
    }
  }
  return depths;
}

/** Breadth-first parent of each vertex (parent of the base is -1). */
export function ballParents(ball: BallJson): number[] {
  const parents = new Array<number>(ball.vertices.length).fill(-2);
  parents[0] = -1;
  const queue = [0];
  for (let head = 0; head < queue.length; head += 1) {
    const i = queue[head]!;
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
export function pathFromBase(ball: BallJson, index: number): number[] {
  if (index < 0 || index >= ball.vertices.length) {
    return [];
  }
  const parents = ballParents(ball);
  const path: number[] = [];
  for (let i = index; i !== -1; i = parents[i]!) {
    path.push(i);
  }
  return path.reverse();
}
