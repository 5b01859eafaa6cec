/** JSON contract of the game service.  Every numeric value arrives as an
 * exact rational string "p/q" (or an integer string); the client never
 * converts these except for drawing coordinates. */

export interface PoseJson {
  /** 3x3 matrix of exact rational strings, row major. */
  linear: string[][];
  /** translation column of exact rational strings. */
  translation: string[];
}

export interface WordJson {
  /** reduced free letters, each in 0..3; no two adjacent letters equal. */
  free: number[];
  /** permutation of 0..3; [0,1,2,3] is the identity. */
  perm: number[];
}

export interface TreeVertexJson {
  a: number;
  b: number;
  c: number;
}

export interface GameJson {
  id: string;
  pose: PoseJson;
  history: string[];
  word: WordJson;
  solved: boolean;
  tree_vertex: TreeVertexJson;
}

export interface SolveJson {
  id: string;
  moves: string[];
}

export interface BallJson {
  radius: number;
  /** breadth-first from the base vertex; vertices[0] is the base. */
  vertices: TreeVertexJson[];
  /** adjacency[i] lists the indices of the neighbours of vertices[i]. */
  adjacency: number[][];
}

export interface ErrorJson {
  error: string;
}
