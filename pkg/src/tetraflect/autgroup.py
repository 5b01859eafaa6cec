"""Normal forms for the free-product-by-symmetric group and its lattice action.

The abstract group is UC(4) x| S4: the free product of four order-2 letters
x0..x3, extended by the permutations of {0,1,2,3} acting on subscripts.  A
word is stored in the normal form (free part, permutation) with the free part
on the left.  The faithful rank-10 representation sends x_a to the involution
g_{a4} and a permutation to the induced coordinate permutation.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .lattice import (
    PAIRS,
    PAIR_INDEX,
    RANK,
    LatticeIsometry,
    LatticeVector,
    alpha,
    delta,
    inner_product,
    pair,
    reflect_in_root,
    U,
)
from .ratio import Rational, fr, fr_str

LETTERS = (0, 1, 2, 3)
IDENTITY_PERM = (0, 1, 2, 3)
ALL_PERMS = tuple(permutations(range(4)))

ITERATION_CAP = 10 ** 6


@dataclass(frozen=True)
class FamilyParams:
    """Five nonzero weights lambda_0..lambda_4 selecting a surface family."""

    lambdas: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.lambdas) != 5:
            raise ValueError("need five weights")
        if any(x == 0 for x in self.lambdas):
            raise ValueError("weights must be nonzero")

    @classmethod
    def of(cls, *values: Rational | str) -> "FamilyParams":
        return cls(tuple(fr(v) if not isinstance(v, str) else fr(v)
                         for v in values))

    @classmethod
    def parse(cls, text: str) -> "FamilyParams":
        return cls.of(*(part.strip() for part in text.split(",")))

    def is_one_parameter(self) -> bool:
        """Shape (s,s,s,s,t) with t != s: the implemented group family."""
        l = self.lambdas
        return l[0] == l[1] == l[2] == l[3] != l[4]

    def all_distinct(self) -> bool:
        return len(set(self.lambdas)) == 5

    def to_json(self) -> list[str]:
        return [fr_str(x) for x in self.lambdas]


DEFAULT_PARAMS = FamilyParams.of(1, 1, 1, 1, Fraction(1, 16))


def _compose_perm(s: Sequence[int], t: Sequence[int]) -> tuple[int, ...]:
    # (s o t)(i) = s(t(i))
    return tuple(s[t[i]] for i in range(4))


def _invert_perm(s: Sequence[int]) -> tuple[int, ...]:
    out = [0] * 4
    for i, v in enumerate(s):
        out[v] = i
    return tuple(out)


def _reduce_free(letters: Iterable[int]) -> tuple[int, ...]:
    # cancel adjacent equal letters (each letter is an involution)
    out: list[int] = []
    for x in letters:
        if out and out[-1] == x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    """Normal form: reduced free part over x0..x3, then a permutation."""

    free: tuple[int, ...] = ()
    perm: tuple[int, ...] = IDENTITY_PERM

    def __post_init__(self) -> None:
        if any(x not in LETTERS for x in self.free):
            raise ValueError(f"letters must be in 0..3: {self.free}")
        if any(a == b for a, b in zip(self.free, self.free[1:])):
            raise ValueError(f"free part not reduced: {self.free}")
        if sorted(self.perm) != [0, 1, 2, 3]:
            raise ValueError(f"not a permutation of 0..3: {self.perm}")

    @classmethod
    def identity(cls) -> "GroupWord":
        return cls()

    @classmethod
    def letter(cls, a: int) -> "GroupWord":
        return cls(free=(a,))

    @property
    def length(self) -> int:
        return len(self.free)

    def is_identity(self) -> bool:
        return not self.free and self.perm == IDENTITY_PERM

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return word_multiply(self, other)

    def inverse(self) -> "GroupWord":
        return word_inverse(self)

    def to_json(self) -> dict:
        return {"free": list(self.free), "perm": list(self.perm)}

    @classmethod
    def from_json(cls, payload: dict) -> "GroupWord":
        return cls(tuple(payload["free"]), tuple(payload["perm"]))

    def __str__(self) -> str:
        return format_word(self)


def word_multiply(u: GroupWord, v: GroupWord) -> GroupWord:
    """Normal-form product: push u.perm through v's letters, then reduce."""
    moved = tuple(u.perm[x] for x in v.free)
    return GroupWord(_reduce_free(u.free + moved),
                     _compose_perm(u.perm, v.perm))


def word_inverse(u: GroupWord) -> GroupWord:
    inv = _invert_perm(u.perm)
    return GroupWord(tuple(inv[x] for x in reversed(u.free)), inv)


def format_word(w: GroupWord) -> str:
    tokens = [f"x{a}" for a in w.free]
    if w.perm != IDENTITY_PERM:
        tokens.append("s=(" + "".join(str(i) for i in w.perm) + ")")
    return " ".join(tokens) if tokens else "e"


def parse_word(text: str) -> GroupWord:
    """Parse "x0 x1 s=(1032)"; "e" is the identity; the s-token is last."""
    tokens = text.split()
    if tokens == ["e"] or not tokens:
        return GroupWord.identity()
    free: list[int] = []
    perm = IDENTITY_PERM
    for i, tok in enumerate(tokens):
        if tok in ("x0", "x1", "x2", "x3"):
            free.append(int(tok[1]))
        elif tok.startswith("s=(") and tok.endswith(")"):
            if i != len(tokens) - 1:
                raise ValueError("permutation token must come last")
            digits = tok[3:-1]
            if len(digits) != 4 or not digits.isdigit():
                raise ValueError(f"bad permutation token: {tok}")
            perm = tuple(int(d) for d in digits)
        else:
            raise ValueError(f"bad word token: {tok}")
    return GroupWord(_reduce_free(free), perm)


def free_words(max_len: int) -> list[tuple[int, ...]]:
    """All reduced free parts of length <= max_len, shortest first."""
    out: list[tuple[int, ...]] = [()]
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(max_len):
        frontier = [w + (a,) for w in frontier for a in LETTERS
                    if not w or w[-1] != a]
        out.extend(frontier)
    return out


def all_words(max_len: int) -> list[GroupWord]:
    return [GroupWord(u, p) for u in free_words(max_len) for p in ALL_PERMS]


def random_reduced_word(rng: random.Random, length: int) -> GroupWord:
    """A uniformly random reduced free word (never plays the cancelling letter)."""
    free: list[int] = []
    for _ in range(length):
        choices = [a for a in LETTERS if not free or free[-1] != a]
        free.append(rng.choice(choices))
    return GroupWord(tuple(free))


# ---------------------------------------------------------------------------
# lattice representation

def generator_matrix(a: int, b: int, params: FamilyParams) -> LatticeIsometry:
    """The involution g_ab on the lattice: t_ab, composed with the
    reflection in alpha_ab when lambda_a != lambda_b (the two commute)."""
    if a == b:
        raise ValueError("indices must differ")
    perm5 = list(range(5))
    perm5[a], perm5[b] = perm5[b], perm5[a]
    transposition = LatticeIsometry.from_permutation(perm5)
    if params.lambdas[a] == params.lambdas[b]:
        return transposition
    root = alpha(a, b)
    reflection = LatticeIsometry.from_columns(
        [reflect_in_root(root, U(c, d)) for c, d in PAIRS]
    )
    return transposition.compose(reflection)


def _require_one_parameter(params: FamilyParams) -> None:
    if not params.is_one_parameter():
        raise ValueError(
            "this operation needs weights of shape (s,s,s,s,t) with t != s"
        )


def letter_matrices(params: FamilyParams) -> tuple[LatticeIsometry, ...]:
    """Images of x0..x3, i.e. g_04..g_34, for a one-parameter family."""
    _require_one_parameter(params)
    return tuple(generator_matrix(a, 4, params) for a in LETTERS)


def perm_matrix(perm: Sequence[int]) -> LatticeIsometry:
    return LatticeIsometry.from_permutation(list(perm) + [4])


def word_to_isometry(w: GroupWord, params: FamilyParams = DEFAULT_PARAMS,
                     ) -> LatticeIsometry:
    """The representation matrix of a normal-form word."""
    letters = letter_matrices(params)
    result: LatticeIsometry | None = None
    for a in w.free:
        result = letters[a] if result is None else result.compose(letters[a])
    tail = perm_matrix(w.perm)
    return tail if result is None else result.compose(tail)


# ---------------------------------------------------------------------------
# chamber reduction and nef tests

def interior_roots(params: FamilyParams) -> tuple[LatticeVector, ...]:
    """The walls crossed inside the nef cone: alpha_a4 for the family shape."""
    _require_one_parameter(params)
    return tuple(alpha(a, 4) for a in LETTERS)


def exterior_roots(params: FamilyParams) -> tuple[LatticeVector, ...]:
    """Walls of the nef cone itself: every U plus alpha_ab with equal weights."""
    _require_one_parameter(params)
    walls = [U(a, b) for a, b in PAIRS]
    walls.extend(alpha(a, b) for a, b in PAIRS
                 if params.lambdas[a] == params.lambdas[b])
    return tuple(walls)


def reduce_to_chamber(v: LatticeVector,
                      params: FamilyParams = DEFAULT_PARAMS,
                      ) -> tuple[LatticeVector, GroupWord]:
    """Descend v into the chamber with nonnegative interior pairings.

    Returns (v', w) with v' = word_to_isometry(w)(v).  Each step applies the
    generator with the most negative pairing (ties to the lowest letter),
    which lowers the Delta-pairing by twice that amount.
    """
    _require_one_parameter(params)
    if inner_product(v, v) < 0:
        raise ValueError("needs v.v >= 0")
    if not v.is_zero() and inner_product(v, delta()) <= 0:
        raise ValueError("needs v.Delta > 0")
    roots = interior_roots(params)
    letters = letter_matrices(params)
    word = GroupWord.identity()
    for _ in range(ITERATION_CAP):
        worst: tuple[Fraction, int] | None = None
        for a in LETTERS:
            p = inner_product(v, roots[a])
            if p < 0 and (worst is None or p < worst[0]):
                worst = (p, a)
        if worst is None:
            return v, word
        a = worst[1]
        v = letters[a].apply(v)
        word = GroupWord.letter(a) * word
    raise RuntimeError("chamber reduction exceeded the iteration cap")


def is_nef(v: LatticeVector, params: FamilyParams = DEFAULT_PARAMS) -> bool:
    """Whether v lies in the closed chamber union (the nef cone).

    Classes with v.v < 0 or v.Delta < 0 are rejected outright; the zero
    class is vacuously nef.  Otherwise v is reduced and tested against the
    exterior walls.
    """
    _require_one_parameter(params)
    if inner_product(v, v) < 0:
        return False
    if v.is_zero():
        return True
    if inner_product(v, delta()) <= 0:
        return False
    reduced, _ = reduce_to_chamber(v, params)
    return all(inner_product(reduced, r) >= 0 for r in exterior_roots(params))


# ---------------------------------------------------------------------------
# relation and solution-count checks

def verify_shimada_relations(params: FamilyParams) -> bool:
    """The presentation relations for five pairwise distinct weights:
    g_ab^2 = 1, (g_ab g_bc g_ca)^2 = 1, and (g_ab g_cd)^2 = 1 for
    disjoint {a,b}, {c,d}."""
    if not params.all_distinct():
        raise ValueError("needs five pairwise distinct weights")
    g = {(a, b): generator_matrix(a, b, params)
         for a in range(5) for b in range(5) if a != b}
    ident = LatticeIsometry.identity()
    for key, mat in g.items():
        if mat.compose(mat) != ident:
            return False
    for a, b, c in permutations(range(5), 3):
        m = g[(a, b)].compose(g[(b, c)]).compose(g[(c, a)])
        if m.compose(m) != ident:
            return False
    for a, b in PAIRS:
        for c, d in PAIRS:
            if {a, b} & {c, d}:
                continue
            m = g[(a, b)].compose(g[(c, d)])
            if m.compose(m) != ident:
                return False
    return True


def new_nodes(t: Rational | str) -> list[tuple[Fraction, ...]]:
    """Projective solutions of y_a = +-1 (a <= 3), t*y4^2 = 1, sum y_a = 0.

    Representatives are normalized so the first four coordinates sum to a
    positive number; the weight-reciprocal equation is equivalent to the sum
    equation once the normalizations hold.
    """
    t = fr(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    found: set[tuple[Fraction, ...]] = set()
    for signs in ((s0, s1, s2, s3)
                  for s0 in (1, -1) for s1 in (1, -1)
                  for s2 in (1, -1) for s3 in (1, -1)):
        total = sum(signs)
        if total == 0:
            continue
        y4 = Fraction(-total)
        if t * y4 * y4 != 1:
            continue
        tup = tuple(Fraction(s) for s in signs) + (y4,)
        if total < 0:
            tup = tuple(-x for x in tup)
        found.add(tup)
    return sorted(found, reverse=True)


# ---------------------------------------------------------------------------
# batch enumeration kernels (int64; entries stay far below 2^63 here)

def _int_matrix(m: LatticeIsometry) -> np.ndarray:
    out = np.empty((RANK, RANK), dtype=np.int64)
    for i, row in enumerate(m.matrix):
        for j, x in enumerate(row):
            if x.denominator != 1:
                raise ValueError("matrix is not integral")
            out[i, j] = int(x)
    return out


def _pair_perm(perm: Sequence[int]) -> np.ndarray:
    """Column-index array of the pair permutation induced by a 4-perm."""
    full = list(perm) + [4]
    return np.array([PAIR_INDEX[pair(full[a], full[b])] for a, b in PAIRS])


def _free_matrix_table(max_len: int, params: FamilyParams,
                       ) -> tuple[list[tuple[int, ...]], dict, np.ndarray]:
    """Representation matrices of every reduced free word up to max_len."""
    letters = [_int_matrix(m) for m in letter_matrices(params)]
    words = free_words(max_len)
    index = {w: i for i, w in enumerate(words)}
    mats = np.empty((len(words), RANK, RANK), dtype=np.int64)
    mats[0] = np.eye(RANK, dtype=np.int64)
    for w, i in index.items():
        if w:
            mats[i] = mats[index[w[:-1]]] @ letters[w[-1]]
    return words, index, mats


def check_injectivity(max_len: int = 6,
                      params: FamilyParams = DEFAULT_PARAMS,
                      ) -> tuple[bool, int]:
    """Distinctness of all representation matrices up to the given length.

    Returns (all distinct, number of words checked); at length 6 the count
    is 34968 = 24 * 1457.
    """
    words, _, mats = _free_matrix_table(max_len, params)
    hats = [_pair_perm(p) for p in ALL_PERMS]
    seen: set[bytes] = set()
    for i in range(len(words)):
        block = mats[i]
        for hat in hats:
            seen.add(block[:, hat].tobytes())
    total = len(words) * len(ALL_PERMS)
    return len(seen) == total, total


def check_homomorphism(total_len: int = 4,
                       params: FamilyParams = DEFAULT_PARAMS,
                       ) -> tuple[bool, dict]:
    """Representation respects the group law.

    Two layers: (1) literally, matrix(u)matrix(v) = matrix(uv) for every
    pair of words whose free lengths sum to at most total_len, over all
    24 x 24 permutation parts; (2) structurally, the concatenation table of
    free words up to total_len, the conjugation rule perm o x_a o perm^-1 =
    x_perm(a), and the permutation composition table, which together imply
    the law for all pairs of words up to length total_len each.
    """
    words, index, mats = _free_matrix_table(2 * total_len, params)
    hats = np.stack([_pair_perm(p) for p in ALL_PERMS])
    perm_index = {p: i for i, p in enumerate(ALL_PERMS)}
    compose_idx = np.array(
        [[perm_index[_compose_perm(s, t)] for t in ALL_PERMS]
         for s in ALL_PERMS]
    )
    short = [w for w in words if len(w) <= total_len]

    # structural layer: free-by-free concatenation up to total_len each
    pair_count = 0
    for u in short:
        iu = index[u]
        for v in short:
            prod = mats[iu] @ mats[index[v]]
            if not np.array_equal(prod, mats[index[_reduce_free(u + v)]]):
                return False, {"failed": (u, v)}
            pair_count += 1

    # structural layer: conjugation and permutation tables
    eye = np.eye(RANK, dtype=np.int64)
    for p in ALL_PERMS:
        P = eye[:, hats[perm_index[p]]]
        for a in LETTERS:
            # conjugation rule in the equivalent form P X_a = X_{p(a)} P
            if not np.array_equal(P @ mats[index[(a,)]],
                                  mats[index[(p[a],)]] @ P):
                return False, {"failed": ("conjugation", p, a)}
    for s in ALL_PERMS:
        for t in ALL_PERMS:
            if not np.array_equal(hats[perm_index[s]][hats[perm_index[t]]],
                                  hats[compose_idx[perm_index[s],
                                                   perm_index[t]]]):
                return False, {"failed": ("perm-compose", s, t)}

    # literal layer: |u| + |v| <= total_len with all permutation parts
    literal = 0
    split_pairs = [(u, v) for u in short for v in short
                   if len(u) + len(v) <= total_len]
    for u, v in split_pairs:
        A = mats[index[u]][:, hats].transpose(1, 0, 2)    # (24, R, R)
        B = mats[index[v]][:, hats].transpose(1, 0, 2)
        lhs = np.einsum("aij,bjk->abik", A, B)
        rhs = np.empty_like(lhs)
        for si, s in enumerate(ALL_PERMS):
            moved = _reduce_free(u + tuple(s[x] for x in v))
            W = mats[index[moved]]
            rhs[si] = W[:, hats[compose_idx[si]]].transpose(1, 0, 2)
        if not np.array_equal(lhs, rhs):
            return False, {"failed": (u, v)}
        literal += len(ALL_PERMS) ** 2
    return True, {
        "literal_pairs": literal,
        "free_concat_pairs": pair_count,
        "conjugation_checks": len(ALL_PERMS) * len(LETTERS),
        "perm_table_checks": len(ALL_PERMS) ** 2,
    }
