"""The 3-adic splitting of the quaternion algebra and its Bruhat-Tits tree.

Vertices of the 4-regular tree are homothety classes of rank-two
Z_3-lattices; the canonical name of a class is the column Hermite form
((3^a, 0), (c, 3^b)) of its unique primitive representative inside Z_3^2,
so vertex equality is a syntactic triple comparison.  Group elements enter
only through split_quaternion of Z[1/3]-quaternions, which keeps every
valuation bounded and the precision analysis simple.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product as iproduct

from .autgroup import free_words
from .padic import (DEFAULT_PRECISION, Padic3, PrecisionExhausted,
                    sqrt_minus_two)
from .quaternions import (DIAGONALS, RationalQuaternion, perm_quaternions,
                          word_quaternion)


@dataclass(frozen=True)
class TreeVertex:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0:
            raise ValueError("scaling exponents must be nonnegative")
        if not 0 <= self.c < 3 ** self.b:
            raise ValueError("offset out of range")
        if self.a > 0 and self.b > 0 and self.c % 3 == 0:
            raise ValueError("representative is not primitive")

    def distance_from_base(self) -> int:
        return self.a + self.b

    def vertex_class(self) -> int:
        """Bipartition class: parity of the distance from the base."""
        return (self.a + self.b) % 2

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c}

    @classmethod
    def from_json(cls, data: dict) -> "TreeVertex":
        return cls(int(data["a"]), int(data["b"]), int(data["c"]))


BASE = TreeVertex(0, 0, 0)


def representative(v: TreeVertex) -> tuple[tuple[int, int], tuple[int, int]]:
    """Integer basis matrix, columns (3^a, c) and (0, 3^b)."""
    return ((3 ** v.a, 0), (v.c, 3 ** v.b))


@dataclass(frozen=True)
class SplitMatrix:
    """2x2 matrix over truncated Q_3."""

    entries: tuple[tuple[Padic3, Padic3], tuple[Padic3, Padic3]]

    @classmethod
    def from_ints(cls, rows, precision: int = DEFAULT_PRECISION
                  ) -> "SplitMatrix":
        return cls(tuple(tuple(Padic3.from_int(x, precision) for x in row)
                         for row in rows))

    @classmethod
    def identity(cls, precision: int = DEFAULT_PRECISION) -> "SplitMatrix":
        return cls.from_ints(((1, 0), (0, 1)), precision)

    def __matmul__(self, other: "SplitMatrix") -> "SplitMatrix":
        a, b = self.entries, other.entries
        return SplitMatrix(tuple(
            tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2))
            for i in range(2)))

    def det(self) -> Padic3:
        e = self.entries
        return e[0][0] * e[1][1] - e[0][1] * e[1][0]

    def mod3(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Entrywise reduction mod 3; needs nonnegative valuations."""
        return tuple(tuple(x.residue(1) for x in row)
                     for row in self.entries)


@cache
def _branch_root(precision: int) -> Padic3:
    return sqrt_minus_two(precision)


def split_quaternion(q: RationalQuaternion,
                     precision: int = DEFAULT_PRECISION) -> SplitMatrix:
    """Image of q under i -> ((0,-1),(1,0)), j -> ((1,v),(v,-1)), k = ij,
    with v the square root of -2 congruent to 1 mod 3."""
    v = _branch_root(precision)
    w, x, y, z = (Padic3.from_rational(t, precision)
                  for t in q.coefficients())
    return SplitMatrix((
        (w + y - z * v, -x + y * v + z),
        (x + y * v + z, w - y + z * v),
    ))


def _pivot_column(row: tuple[Padic3, Padic3]) -> int:
    """Column whose valuation is certified minimal in a scaled row; ties
    pick column 0 (any valid pivot yields the same canonical triple)."""
    left, right = row
    # a pivot must be certified nonzero with valuation <= the other entry's
    # lower bound (exact zero counts as bound infinity)
    if left.known_nonzero() and (right.is_exact_zero()
                                 or right.valuation >= left.valuation):
        return 0
    if right.known_nonzero() and (left.is_exact_zero()
                                  or left.valuation >= right.valuation):
        return 1
    if left.is_exact_zero() and right.is_exact_zero():
        raise ValueError("matrix is singular")
    raise PrecisionExhausted("pivot valuation not certified")


def canonical_vertex(m: SplitMatrix) -> TreeVertex:
    """Canonical triple of the homothety class of the column span of m."""
    flat = [x for row in m.entries for x in row]
    certified = [x.valuation for x in flat if x.known_nonzero()]
    if not certified:
        if all(x.is_exact_zero() for x in flat):
            raise ValueError("matrix is singular")
        raise PrecisionExhausted("scaling valuation not certified")
    scale = min(certified)
    for x in flat:
        if x.is_indeterminate() and x.valuation < scale:
            raise PrecisionExhausted("scaling valuation not certified")
    (e00, e01), (e10, e11) = (tuple(x.shift(-scale) for x in row)
                              for row in m.entries)
    if _pivot_column((e00, e01)) == 1:
        e00, e01 = e01, e00
        e10, e11 = e11, e10
    # clear the top-right entry by a column operation over Z_3; exact and
    # indeterminate zeros propagate through the padic operations
    e11 = e11 - (e01 * e00.invert()) * e10
    a = e00.valuation
    if e11.is_exact_zero():
        raise ValueError("matrix is singular")
    if not e11.known_nonzero():
        raise PrecisionExhausted("diagonal valuation not certified")
    b = e11.valuation
    # scale the pivot column to (3^a, c): divide by the unit part of e00
    unit_inv = e00.invert().shift(a)
    return TreeVertex(a, b, (e10 * unit_inv).residue(b))


def act(g: SplitMatrix, v: TreeVertex) -> TreeVertex:
    precision = max((x.precision for row in g.entries for x in row
                     if x.known_nonzero()), default=DEFAULT_PRECISION)
    return canonical_vertex(g @ SplitMatrix.from_ints(representative(v),
                                                      precision))


def neighbors(v: TreeVertex,
              precision: int = DEFAULT_PRECISION) -> tuple[TreeVertex, ...]:
    """Canonical forms of the four index-3 sublattices of v."""
    (p, _), (c, q) = representative(v)
    # representative times diag(3,1) and ((1,0),(c',3)) for c' in 0..2
    candidates = [((3 * p, 0), (3 * c, q))]
    for shift in range(3):
        candidates.append(((p, 0), (c + q * shift, 3 * q)))
    return tuple(canonical_vertex(SplitMatrix.from_ints(m, precision))
                 for m in candidates)


def levels(radius: int,
           precision: int = DEFAULT_PRECISION) -> tuple[tuple[TreeVertex,
                                                              ...], ...]:
    """Vertices of the ball around the base, grouped by distance."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    seen = {BASE}
    shells = [(BASE,)]
    for _ in range(radius):
        shell = []
        for v in shells[-1]:
            for n in neighbors(v, precision):
                if n not in seen:
                    seen.add(n)
                    shell.append(n)
        shells.append(tuple(shell))
    return tuple(shells)


def ball(radius: int,
         precision: int = DEFAULT_PRECISION) -> tuple[TreeVertex, ...]:
    return tuple(v for shell in levels(radius, precision) for v in shell)


def ball_adjacency(radius: int, precision: int = DEFAULT_PRECISION
                   ) -> dict[TreeVertex, tuple[TreeVertex, ...]]:
    """Adjacency lists of the radius ball (edges inside the ball only),
    keyed in breadth-first order from the base."""
    ordered = ball(radius, precision)
    inside = set(ordered)
    return {v: tuple(n for n in neighbors(v, precision) if n in inside)
            for v in ordered}


def fixed_vertices(g: SplitMatrix, radius: int,
                   precision: int = DEFAULT_PRECISION) -> set[TreeVertex]:
    return {v for v in ball(radius, precision) if act(g, v) == v}


def verify_simple_transitivity(max_len: int,
                               precision: int = DEFAULT_PRECISION) -> dict:
    """Words in the four diagonal generators versus the tree ball.

    Maps every reduced word of length <= max_len to its image of the base
    vertex and reports whether this is a length-preserving bijection onto
    the ball, with odd-length words landing in the opposite vertex class.
    """
    images: dict[TreeVertex, tuple[int, ...]] = {}
    counts = [0] * (max_len + 1)
    distances_match = True
    bipartition = True
    for word in free_words(max_len):
        q = RationalQuaternion(*((1, 0, 0, 0)))
        for letter in word:
            q = q * DIAGONALS[letter]
        vertex = act(split_quaternion(q, precision), BASE)
        if vertex in images:
            return {"bijection": False, "counts": tuple(counts),
                    "distances_match": False, "bipartition": False}
        images[vertex] = word
        counts[len(word)] += 1
        if vertex.distance_from_base() != len(word):
            distances_match = False
        if vertex.vertex_class() != len(word) % 2:
            bipartition = False
    bijection = set(images) == set(ball(max_len, precision))
    return {"bijection": bijection, "counts": tuple(counts),
            "distances_match": distances_match, "bipartition": bipartition}


def stabilizer_order(max_free_len: int = 3,
                     precision: int = DEFAULT_PRECISION) -> int:
    """Number of enumerated group elements fixing the base vertex.

    Elements are reduced diagonal words of length <= max_free_len times one
    of the 24 permutation quaternions.
    """
    count = 0
    for word in free_words(max_free_len):
        for perm in perm_quaternions():
            q = word_quaternion(word, perm)
            if act(split_quaternion(q, precision), BASE) == BASE:
                count += 1
    return count


def _mat_mul_mod(a, b, mod):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) % mod
                       for j in range(2)) for i in range(2))


def _mat_pow_mod(m, n, mod):
    out = ((1, 0), (0, 1))
    for _ in range(n):
        out = _mat_mul_mod(out, m, mod)
    return out


def verify_distance2_rigidity() -> bool:
    """Exact SL2(Z/9) computation behind the fixed-point lemma.

    The stabilizer of a cyclic Z/9 inside (Z/9)^2 is generated by the
    unipotent tau = ((1,1),(0,1)) and the torus sigma = diag(2, 2^-1); the
    check confirms sigma tau sigma^-1 = tau^4, that the subgroup has order
    54, that every order-3 element lies in <tau^3> x| <sigma^2> and reduces
    to the identity mod 3, and that SL2(Z/9) permutes the 12 cyclic Z/9
    subgroups transitively (so the stabilizer shape is generic).
    """
    mod = 9
    identity = ((1, 0), (0, 1))
    tau = ((1, 1), (0, 1))
    sigma = ((2, 0), (0, 5))
    sigma_inv = ((5, 0), (0, 2))
    if _mat_mul_mod(sigma, sigma_inv, mod) != identity:
        return False
    conj = _mat_mul_mod(_mat_mul_mod(sigma, tau, mod), sigma_inv, mod)
    if conj != _mat_pow_mod(tau, 4, mod):
        return False
    if _mat_pow_mod(tau, 3, 3) != identity or \
            _mat_pow_mod(sigma, 2, 3) != identity:
        return False
    group = {}
    for i in range(9):
        for j in range(6):
            m = _mat_mul_mod(_mat_pow_mod(tau, i, mod),
                             _mat_pow_mod(sigma, j, mod), mod)
            group[m] = (i, j)
    if len(group) != 54:
        return False
    for x in group:
        for y in group:
            if _mat_mul_mod(x, y, mod) not in group:
                return False
    small = {_mat_mul_mod(_mat_pow_mod(tau, 3 * i, mod),
                          _mat_pow_mod(sigma, 2 * j, mod), mod)
             for i in range(3) for j in range(3)}
    for x in group:
        if x != identity and _mat_pow_mod(x, 3, mod) == identity:
            if x not in small:
                return False
            if tuple(tuple(t % 3 for t in row) for row in x) != identity:
                return False
    # transitivity of SL2(Z/9) on the 12 cyclic subgroups of order 9
    def span(vec):
        return frozenset(((t * vec[0]) % mod, (t * vec[1]) % mod)
                         for t in range(mod))

    subgroups = {span((x, y)) for x in range(mod) for y in range(mod)
                 if x % 3 != 0 or y % 3 != 0}
    if len(subgroups) != 12:
        return False
    orbit = set()
    for m in iproduct(range(mod), repeat=4):
        if (m[0] * m[3] - m[1] * m[2]) % mod == 1:
            orbit.add(span((m[0], m[2])))
    return orbit == subgroups
