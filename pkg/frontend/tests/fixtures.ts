/** Frozen service responses captured from a live server. */
import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { BallJson, GameJson, SolveJson } from "../src/types.js";

const here = dirname(fileURLToPath(import.meta.url));

function load<T>(name: string): T {
  return JSON.parse(
    readFileSync(join(here, "fixtures", name), "utf8"),
  ) as T;
}

/** fresh game: reference pose, empty word */
export const gameReference = load<GameJson>("game_reference.json");
/** one F0 from the reference pose */
export const gameAfterF0 = load<GameJson>("game_after_f0.json");
/** scramble 4 with seed 42: history F0 F1 F3 F1 */
export const gameScrambled = load<GameJson>("game_scrambled.json");
/** return path of the scrambled game */
export const solveScrambled = load<SolveJson>("solve_scrambled.json");
/** one symmetry move S=(1032) from the reference pose */
export const gameAfterSym = load<GameJson>("game_after_sym.json");
/** radius-2 ball: 17 vertices */
export const ballR2 = load<BallJson>("ball_r2.json");
/** radius-4 ball: 161 vertices */
export const ballR4 = load<BallJson>("ball_r4.json");
