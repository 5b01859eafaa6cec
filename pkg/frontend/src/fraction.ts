/** Reading exact rational strings for drawing purposes only.
 *
 * The service sends every number as "p" or "p/q".  Display panels show
 * those strings verbatim; only the geometric projection needs floats.
 */

const FRACTION_RE = /^(-?\d+)(?:\/(-?\d+))?$/;

/** Parse "p/q" (or "p") into a float for screen coordinates. */
export function fractionToNumber(text: string): number {
  const m = FRACTION_RE.exec(text);
  if (m === null) {
    throw new Error(`not an exact rational string: ${JSON.stringify(text)}`);
  }
  const p = Number(m[1]);
  const q = m[2] === undefined ? 1 : Number(m[2]);
  if (q === 0) {
    throw new Error(`zero denominator: ${JSON.stringify(text)}`);
  }
  return p / q;
}

/** True when the string is a well-formed exact rational. */
export function isFractionString(text: string): boolean {
  const m = FRACTION_RE.exec(text);
  return m !== null && m[2] !== "0";
}
