/** Presentation of reduced words and move tokens.
 *
 * The service reduces every word; the client only formats what it
 * receives.  The token grammar matches the service exactly:
 * letters "x0".."x3", a trailing permutation "s=(1032)", identity "e";
 * move tokens "F0".."F3" and "S=(1032)".
 */
import type { WordJson } from "./types.js";

export const IDENTITY_PERM: readonly number[] = [0, 1, 2, 3];

export function isIdentityPerm(perm: readonly number[]): boolean {
  return perm.length === 4 && perm.every((v, i) => v === i);
}

/** Render a reduced word the way the service prints it. */
export function formatWord(word: WordJson): string {
  const tokens = word.free.map((a) => `x${a}`);
  if (!isIdentityPerm(word.perm)) {
    tokens.push(`s=(${word.perm.join("")})`);
  }
  return tokens.length > 0 ? tokens.join(" ") : "e";
}

/** Tree depth of a word: the number of free letters. */
export function wordDepth(word: WordJson): number {
  return word.free.length;
}

/** True for a wellformed move token "F0".."F3" or "S=(permutation)". */
export function isMoveToken(token: string): boolean {
  const m = /^(?:F([0-3])|S=\(([0-3]{4})\))$/.exec(token.trim());
  if (m === null) {
    return false;
  }
  if (m[2] !== undefined) {
    return [...m[2]].map(Number).sort().join("") === "0123";
  }
  return true;
}
