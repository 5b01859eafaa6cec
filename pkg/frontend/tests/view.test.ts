import { describe, expect, it } from "vitest";

import {
  ballDepths,
  ballParents,
  buildView,
  findVertexIndex,
  pathFromBase,
  sameVertex,
} from "../src/view.js";
import {
  ballR2,
  ballR4,
  gameAfterF0,
  gameAfterSym,
  gameReference,
  gameScrambled,
} from "./fixtures.js";

describe("ballDepths", () => {
  it("recovers the sphere sizes 1, 4, 12, 36, 108", () => {
    const depths = ballDepths(ballR4);
    const counts = new Map<number, number>();
    for (const d of depths) {
      counts.set(d, (counts.get(d) ?? 0) + 1);
    }
    expect(counts.get(0)).toBe(1);
    expect(counts.get(1)).toBe(4);
    expect(counts.get(2)).toBe(12);
    expect(counts.get(3)).toBe(36);
    expect(counts.get(4)).toBe(108);
    expect(depths.every((d) => d >= 0)).toBe(true);
  });

  it("marks the base vertex as depth zero", () => {
    expect(ballDepths(ballR2)[0]).toBe(0);
    expect(sameVertex(ballR2.vertices[0]!, { a: 0, b: 0, c: 0 })).toBe(true);
  });
});

describe("findVertexIndex", () => {
  it("locates captured game vertices at the right depth", () => {
    const depths = ballDepths(ballR4);
    const i0 = findVertexIndex(ballR4, gameAfterF0.tree_vertex);
    expect(i0).toBeGreaterThanOrEqual(0);
    expect(depths[i0]).toBe(1);
    const i4 = findVertexIndex(ballR4, gameScrambled.tree_vertex);
    expect(i4).toBeGreaterThanOrEqual(0);
    expect(depths[i4]).toBe(4);
  });

  it("returns -1 outside the ball and without a ball", () => {
    expect(findVertexIndex(ballR2, gameScrambled.tree_vertex)).toBe(-1);
    expect(findVertexIndex(null, gameReference.tree_vertex)).toBe(-1);
  });
});

describe("pathFromBase", () => {
  it("walks from the base to the target", () => {
    const index = findVertexIndex(ballR4, gameScrambled.tree_vertex);
    const path = pathFromBase(ballR4, index);
    expect(path).toHaveLength(5);
    expect(path[0]).toBe(0);
    expect(path[4]).toBe(index);
    const depths = ballDepths(ballR4);
    path.forEach((v, i) => {
      expect(depths[v]).toBe(i);
    });
    const parents = ballParents(ballR4);
    for (let i = 1; i < path.length; i += 1) {
      expect(parents[path[i]!]).toBe(path[i - 1]);
    }
  });

  it("is empty for indices outside the ball", () => {
    expect(pathFromBase(ballR4, -1)).toEqual([]);
    expect(pathFromBase(ballR4, 9999)).toEqual([]);
  });
});

describe("buildView", () => {
  it("is a pure projection of the server responses", () => {
    const view = buildView(gameScrambled, ballR4, null, false);
    expect(view.game).toBe(gameScrambled);
    expect(view.wordText).toBe("x0 x1 x3 x1");
    expect(view.depth).toBe(4);
    expect(view.solution).toBeNull();
    expect(view.challenge).toBe(false);
    expect(ballDepths(ballR4)[view.vertexIndex]).toBe(4);
  });

  it("keeps a symmetry-only word at the base vertex", () => {
    const view = buildView(gameAfterSym, ballR4, null, false);
    expect(view.depth).toBe(0);
    expect(view.vertexIndex).toBe(0);
    expect(view.wordText).toBe("s=(1032)");
  });
});
