"""The even unimodular lattice of signature (1,9) behind the whole toolkit.

Coordinates are taken in the "U-basis": ten vectors U_ab indexed by the
2-subsets {a,b} of {0,...,4} in lexicographic order, pairing as

    U_ab . U_ab = -2,
    U_ab . U_cd =  1   if {a,b} and {c,d} are disjoint (Petersen adjacency),
    U_ab . U_cd =  0   if they share exactly one index.

The lattice itself is strictly bigger than the Z-span of the U_ab: it also
contains the half-sums f_ab (see `f`), and `integral_basis` produces a true
Z-basis by Hermite reduction.  Distinguished vectors:

    f_ab     = (U_ac + U_ad + U_ae + U_bc + U_bd + U_be) / 2   (norm 0)
    alpha_ab = f_ab - U_ab                                     (norm -2)
    delta    = sum of all U_ab                                 (norm 10)
    nu_(a,b) = 3 U_ab + 2(U_cd + U_de + U_ec) + (U_ae + U_ac + U_ad)  (norm 0)

where {c,d,e} always denotes the complement of {a,b} in {0,...,4}.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .ratio import Rational, fr, fr_str, parse_fr

PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(range(5), 2))
PAIR_INDEX: dict[tuple[int, int], int] = {p: i for i, p in enumerate(PAIRS)}
RANK = len(PAIRS)  # 10


def pair(a: int, b: int) -> tuple[int, int]:
    """The sorted 2-subset {a,b} of {0,...,4}; validates the indices."""
    if a == b or not (0 <= a <= 4 and 0 <= b <= 4):
        raise ValueError(f"need two distinct indices in 0..4, got {a}, {b}")
    return (a, b) if a < b else (b, a)


def complement(a: int, b: int) -> tuple[int, int, int]:
    """The three indices {c,d,e} = {0,...,4} minus {a,b}, ascending."""
    p = pair(a, b)
    return tuple(i for i in range(5) if i not in p)  # type: ignore[return-value]


def _gram_entry(p: tuple[int, int], q: tuple[int, int]) -> int:
    if p == q:
        return -2
    return 1 if not set(p) & set(q) else 0


#: Gram matrix of the U-basis (integer entries).
GRAM: tuple[tuple[int, ...], ...] = tuple(
    tuple(_gram_entry(p, q) for q in PAIRS) for p in PAIRS
)


@dataclass(frozen=True)
class LatticeVector:
    """A vector with exact rational U-basis coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != RANK:
            raise ValueError(f"need {RANK} coordinates, got {len(self.coords)}")

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-x for x in self.coords))

    def __mul__(self, scalar: Rational) -> "LatticeVector":
        c = fr(scalar)
        return LatticeVector(tuple(x * c for x in self.coords))

    __rmul__ = __mul__

    def dot(self, other: "LatticeVector") -> Fraction:
        return inner_product(self, other)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def to_json(self) -> list[str]:
        return [fr_str(x) for x in self.coords]

    @classmethod
    def from_json(cls, payload: Sequence[str]) -> "LatticeVector":
        return vector(*(parse_fr(s) for s in payload))

    def __repr__(self) -> str:
        return f"LatticeVector({', '.join(fr_str(x) for x in self.coords)})"


def vector(*coords: Rational | str) -> LatticeVector:
    """Build a LatticeVector from 10 exact rationals (or strings)."""
    return LatticeVector(tuple(fr(x) for x in coords))


ZERO = vector(*([0] * RANK))


def inner_product(v: LatticeVector, w: LatticeVector) -> Fraction:
    """The symmetric bilinear form in U-coordinates (exact)."""
    total = Fraction(0)
    for i, vi in enumerate(v.coords):
        if vi:
            row = GRAM[i]
            total += vi * sum(row[j] * wj for j, wj in enumerate(w.coords) if wj)
    return total


def U(a: int, b: int) -> LatticeVector:
    """Basis vector U_ab (norm -2)."""
    i = PAIR_INDEX[pair(a, b)]
    return LatticeVector(tuple(Fraction(1 if j == i else 0) for j in range(RANK)))


def f(a: int, b: int) -> LatticeVector:
    """Half-sum f_ab of the six U meeting {a,b} in exactly one index (norm 0)."""
    p = set(pair(a, b))
    half = Fraction(1, 2)
    return LatticeVector(
        tuple(half if len(p & set(q)) == 1 else Fraction(0) for q in PAIRS)
    )


def alpha(a: int, b: int) -> LatticeVector:
    """Root alpha_ab = f_ab - U_ab (norm -2)."""
    return f(a, b) - U(a, b)


def delta() -> LatticeVector:
    """The symmetric vector delta = sum of all U_ab (norm 10)."""
    return LatticeVector(tuple(Fraction(1) for _ in range(RANK)))


def nu(a: int, b: int) -> LatticeVector:
    """Isotropic vector nu_(a,b); the pair is ordered, nu_(a,b) != nu_(b,a)."""
    if a == b or not (0 <= a <= 4 and 0 <= b <= 4):
        raise ValueError(f"need two distinct indices in 0..4, got {a}, {b}")
    c, d, e = complement(a, b)
    v = 3 * U(a, b)
    v = v + 2 * (U(c, d) + U(d, e) + U(e, c))
    return v + U(a, e) + U(a, c) + U(a, d)


def generator(kind: str, *indices: int) -> LatticeVector:
    """Dispatch to the distinguished vectors: U, f, alpha, delta, nu."""
    table = {"U": U, "f": f, "alpha": alpha, "nu": nu}
    if kind == "delta":
        if indices:
            raise ValueError("delta takes no indices")
        return delta()
    if kind not in table:
        raise ValueError(f"unknown generator kind {kind!r}")
    if len(indices) != 2:
        raise ValueError(f"{kind} takes two indices")
    return table[kind](*indices)


def reflect_in_root(r: LatticeVector, v: LatticeVector) -> LatticeVector:
    """Reflection of v in the hyperplane of a (-2)-root r: v + (v.r) r."""
    if inner_product(r, r) != -2:
        raise ValueError("reflection roots must have self-intersection -2")
    return v + inner_product(v, r) * r


# ---------------------------------------------------------------------------
# Integral structure


def _hnf_rows(rows: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form over Z (positive pivots, reduced above)."""
    mat = [row[:] for row in rows]
    m, n = len(mat), len(mat[0])
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        # gcd-eliminate below the pivot
        for i in range(r + 1, m):
            while mat[i][c]:
                q = mat[r][c] // mat[i][c]
                mat[r] = [x - q * y for x, y in zip(mat[r], mat[i])]
                mat[r], mat[i] = mat[i], mat[r]
        if mat[r][c] < 0:
            mat[r] = [-x for x in mat[r]]
        for i in range(r):
            q = mat[i][c] // mat[r][c]
            if q:
                mat[i] = [x - q * y for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == m:
            break
    return [row for row in mat if any(row)]


@lru_cache(maxsize=1)
def integral_basis() -> tuple[LatticeVector, ...]:
    """A Z-basis of the full lattice (generated by all U_ab and f_ab).

    Computed by integer Hermite reduction of the 20 generators after clearing
    the denominator 2.  The result spans an even lattice of determinant -1 and
    signature (1,9); see `verify` for the machine checks.
    """
    rows: list[list[int]] = []
    for a, b in PAIRS:
        rows.append([int(2 * x) for x in U(a, b).coords])
    for a, b in PAIRS:
        rows.append([int(2 * x) for x in f(a, b).coords])
    reduced = _hnf_rows(rows)
    if len(reduced) != RANK:
        raise RuntimeError("generators do not span rank 10")
    half = Fraction(1, 2)
    return tuple(LatticeVector(tuple(half * x for x in row)) for row in reduced)


def gram_matrix(vectors: Sequence[LatticeVector]) -> list[list[Fraction]]:
    """Pairwise inner products of the given vectors."""
    return [[inner_product(v, w) for w in vectors] for v in vectors]


def determinant(matrix: Sequence[Sequence[Rational]]) -> Fraction:
    """Exact determinant by rational Gaussian elimination."""
    n = len(matrix)
    mat = [[fr(x) for x in row] for row in matrix]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if mat[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            det = -det
        det *= mat[c][c]
        inv = 1 / mat[c][c]
        for i in range(c + 1, n):
            if mat[i][c]:
                factor = mat[i][c] * inv
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[c])]
    return det


def signature(matrix: Sequence[Sequence[Rational]]) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia of a symmetric rational matrix.

    Exact symmetric congruence elimination (Sylvester's law): pivot on the
    lowest-index nonzero diagonal entry; if the remaining diagonal is all zero
    but some off-diagonal a_ij is not, first add row/column j into i, which
    makes the (i,i) entry 2*a_ij != 0.
    """
    n = len(matrix)
    a = [[fr(x) for x in row] for row in matrix]
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("signature needs a symmetric matrix")
    pos = neg = zero = 0
    live = list(range(n))
    while live:
        piv = next((i for i in live if a[i][i] != 0), None)
        if piv is None:
            found = None
            for i in live:
                for j in live:
                    if i < j and a[i][j] != 0:
                        found = (i, j)
                        break
                if found:
                    break
            if found is None:
                zero += len(live)
                break
            i, j = found
            for k in live:
                a[i][k] += a[j][k]
            for k in live:
                a[k][i] += a[k][j]
            piv = i
        p = a[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        live.remove(piv)
        for i in live:
            if a[i][piv]:
                factor = a[i][piv] / p
                for j in live:
                    a[i][j] -= factor * a[piv][j]
                a[i][piv] = Fraction(0)
        for j in live:
            a[piv][j] = Fraction(0)
    return pos, neg, zero


@lru_cache(maxsize=1)
def _basis_matrix_inverse() -> tuple[tuple[Fraction, ...], ...]:
    """Inverse of the matrix whose rows are the integral basis (U-coords)."""
    basis = integral_basis()
    n = RANK
    aug = [list(v.coords) + [Fraction(int(i == j)) for j in range(n)]
           for i, v in enumerate(basis)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                factor = aug[i][c]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def basis_coordinates(v: LatticeVector) -> tuple[Fraction, ...]:
    """Coordinates of v in the integral basis (rational, exact)."""
    inv = _basis_matrix_inverse()
    # v = coords . basis  (row vector times basis rows), so coords = v . inv
    return tuple(
        sum(v.coords[i] * inv[i][j] for i in range(RANK)) for j in range(RANK)
    )


def in_lattice(v: LatticeVector) -> bool:
    """Whether v lies in the lattice (integer integral-basis coordinates)."""
    return all(c.denominator == 1 for c in basis_coordinates(v))


@dataclass(frozen=True)
class LatticeIsometry:
    """A linear map in U-coordinates; column j is the image of the j-th U."""

    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.matrix) != RANK or any(len(r) != RANK for r in self.matrix):
            raise ValueError("isometry matrices are 10x10")

    @classmethod
    def identity(cls) -> "LatticeIsometry":
        return cls(tuple(
            tuple(Fraction(int(i == j)) for j in range(RANK)) for i in range(RANK)
        ))

    @classmethod
    def from_columns(cls, images: Sequence[LatticeVector]) -> "LatticeIsometry":
        if len(images) != RANK:
            raise ValueError("need 10 image vectors")
        return cls(tuple(
            tuple(images[j].coords[i] for j in range(RANK)) for i in range(RANK)
        ))

    @classmethod
    def from_permutation(cls, perm: Sequence[int]) -> "LatticeIsometry":
        """The isometry induced by a permutation of the five indices."""
        if sorted(perm) != list(range(5)):
            raise ValueError(f"not a permutation of 0..4: {perm}")
        return cls.from_columns(
            [U(perm[a], perm[b]) for a, b in PAIRS]
        )

    def apply(self, v: LatticeVector) -> LatticeVector:
        return LatticeVector(tuple(
            sum(self.matrix[i][j] * v.coords[j] for j in range(RANK))
            for i in range(RANK)
        ))

    def compose(self, other: "LatticeIsometry") -> "LatticeIsometry":
        """self after other (matrix product self @ other)."""
        om = other.matrix
        return LatticeIsometry(tuple(
            tuple(
                sum(self.matrix[i][k] * om[k][j] for k in range(RANK))
                for j in range(RANK)
            )
            for i in range(RANK)
        ))

    def is_isometry(self) -> bool:
        """Whether the map preserves the bilinear form (M^T G M = G)."""
        cols = [LatticeVector(tuple(row[j] for row in self.matrix))
                for j in range(RANK)]
        for i in range(RANK):
            for j in range(i, RANK):
                if inner_product(cols[i], cols[j]) != GRAM[i][j]:
                    return False
        return True

    def preserves_lattice(self) -> bool:
        """Whether the map carries the lattice bijectively onto itself."""
        if determinant(self.matrix) not in (1, -1):
            return False
        return all(in_lattice(self.apply(v)) for v in integral_basis())

    def to_json(self) -> list[list[str]]:
        return [[fr_str(x) for x in row] for row in self.matrix]

    @classmethod
    def from_json(cls, payload: Sequence[Sequence[str]]) -> "LatticeIsometry":
        return cls(tuple(tuple(parse_fr(s) for s in row) for row in payload))
