import { describe, expect, it } from "vitest";

import { formatWord, isMoveToken, wordDepth } from "../src/words.js";
import { gameAfterSym, gameReference, gameScrambled } from "./fixtures.js";

describe("formatWord", () => {
  it("prints the identity as e", () => {
    expect(formatWord({ free: [], perm: [0, 1, 2, 3] })).toBe("e");
  });

  it("prints free letters in order", () => {
    expect(formatWord({ free: [0], perm: [0, 1, 2, 3] })).toBe("x0");
    expect(formatWord({ free: [0, 1, 3, 1], perm: [0, 1, 2, 3] })).toBe(
      "x0 x1 x3 x1",
    );
  });

  it("prints a trailing permutation token", () => {
    expect(formatWord({ free: [], perm: [1, 0, 3, 2] })).toBe("s=(1032)");
    expect(formatWord({ free: [0, 1], perm: [1, 0, 3, 2] })).toBe(
      "x0 x1 s=(1032)",
    );
  });

  it("matches the captured service payloads", () => {
    expect(formatWord(gameReference.word)).toBe("e");
    expect(formatWord(gameScrambled.word)).toBe("x0 x1 x3 x1");
    expect(formatWord(gameAfterSym.word)).toBe("s=(1032)");
  });
});

describe("wordDepth", () => {
  it("counts free letters only", () => {
    expect(wordDepth(gameReference.word)).toBe(0);
    expect(wordDepth(gameScrambled.word)).toBe(4);
    expect(wordDepth(gameAfterSym.word)).toBe(0);
  });
});

describe("isMoveToken", () => {
  it("accepts facet and symmetry tokens", () => {
    for (const token of ["F0", "F1", "F2", "F3", "S=(1032)", "S=(0123)"]) {
      expect(isMoveToken(token)).toBe(true);
    }
  });

  it("rejects malformed tokens", () => {
    for (const token of ["", "F4", "f0", "x0", "S=(1132)", "S=(012)", "e"]) {
      expect(isMoveToken(token)).toBe(false);
    }
  });
});
