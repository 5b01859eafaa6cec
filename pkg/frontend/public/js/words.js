export const IDENTITY_PERM = [0, 1, 2, 3];
export function isIdentityPerm(perm) {
    return perm.length === 4 && perm.every((v, i) => v === i);
}
/** Render a reduced word the way the service prints it. */
export function formatWord(word) {
    const tokens = word.free.map((a) => `x${a}`);
    if (!isIdentityPerm(word.perm)) {
        tokens.push(`s=(${word.perm.join("")})`);
    }
    return tokens.length > 0 ? tokens.join(" ") : "e";
}
/** Tree depth of a word: the number of free letters. */
export function wordDepth(word) {
    return word.free.length;
}
/** True for a wellformed move token "F0".."F3" or "S=(permutation)". */
export function isMoveToken(token) {
    const m = /^(?:F([0-3])|S=\(([0-3]{4})\))$/.exec(token.trim());
    if (m === null) {
        return false;
    }
    if (m[2] !== undefined) {
        return [...m[2]].map(Number).sort().join("") === "0123";
    }
    return true;
}
