import { describe, expect, it } from "vitest";

import { fractionToNumber, isFractionString } from "../src/fraction.js";
import { gameAfterF0 } from "./fixtures.js";

describe("fractionToNumber", () => {
  it("reads integers and fractions", () => {
    expect(fractionToNumber("0")).toBe(0);
    expect(fractionToNumber("1")).toBe(1);
    expect(fractionToNumber("-2")).toBe(-2);
    expect(fractionToNumber("25/27")).toBeCloseTo(25 / 27, 15);
    expect(fractionToNumber("-10/27")).toBeCloseTo(-10 / 27, 15);
  });

  it("rejects anything that is not an exact rational string", () => {
    for (const bad of ["", "1.5", "a/b", "1/0", "1/2/3", "1e3", " 1"]) {
      expect(() => fractionToNumber(bad)).toThrow();
    }
  });

  it("reads every entry of a captured pose", () => {
    for (const row of gameAfterF0.pose.linear) {
      for (const entry of row) {
        expect(isFractionString(entry)).toBe(true);
        expect(Number.isFinite(fractionToNumber(entry))).toBe(true);
      }
    }
    for (const entry of gameAfterF0.pose.translation) {
      expect(isFractionString(entry)).toBe(true);
    }
  });
});

describe("isFractionString", () => {
  it("agrees with the parser", () => {
    expect(isFractionString("7/3")).toBe(true);
    expect(isFractionString("-7/3")).toBe(true);
    expect(isFractionString("7.3")).toBe(false);
    expect(isFractionString("7/0")).toBe(false);
  });
});
