"""Exact quaternion arithmetic and the rotation model of the group.

The four letters map to half-turn rotations about the body diagonals of the
cube [-1,1]^3, the six transpositions to half-turns about edge midpoints;
together they close to the rotation group of the cube acting on the four
diagonals as the symmetric group.  The reference tetrahedron has vertices
(1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1), one per diagonal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable, Sequence

from .ratio import Rational, fr, fr_str


@dataclass(frozen=True)
class RationalQuaternion:
    """w + x*i + y*j + z*k with exact rational coefficients."""

    w: Fraction
    x: Fraction
    y: Fraction
    z: Fraction

    def __add__(self, o: "RationalQuaternion") -> "RationalQuaternion":
        return RationalQuaternion(self.w + o.w, self.x + o.x,
                                  self.y + o.y, self.z + o.z)

    def __sub__(self, o: "RationalQuaternion") -> "RationalQuaternion":
        return RationalQuaternion(self.w - o.w, self.x - o.x,
                                  self.y - o.y, self.z - o.z)

    def __neg__(self) -> "RationalQuaternion":
        return RationalQuaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, o: "RationalQuaternion | Rational"
                ) -> "RationalQuaternion":
        if not isinstance(o, RationalQuaternion):
            c = fr(o)
            return RationalQuaternion(self.w * c, self.x * c,
                                      self.y * c, self.z * c)
        a, b, c, d = self.w, self.x, self.y, self.z
        e, f, g, h = o.w, o.x, o.y, o.z
        return RationalQuaternion(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )

    def __rmul__(self, o: Rational) -> "RationalQuaternion":
        return self * o

    def conjugate(self) -> "RationalQuaternion":
        return RationalQuaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> Fraction:
        return (self.w * self.w + self.x * self.x
                + self.y * self.y + self.z * self.z)

    def inverse(self) -> "RationalQuaternion":
        n = self.norm()
        if n == 0:
            raise ValueError("zero quaternion has no inverse")
        return self.conjugate() * (Fraction(1) / n)

    def is_zero(self) -> bool:
        return self.norm() == 0

    def is_hurwitz(self) -> bool:
        """All coefficients integral, or all half-odd-integral."""
        parts = (self.w, self.x, self.y, self.z)
        if all(p.denominator == 1 for p in parts):
            return True
        return all(p.denominator == 2 for p in parts)

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.w, self.x, self.y, self.z)

    def to_json(self) -> dict:
        return {"w": fr_str(self.w), "x": fr_str(self.x),
                "y": fr_str(self.y), "z": fr_str(self.z)}

    @classmethod
    def from_json(cls, payload: dict) -> "RationalQuaternion":
        return quat(payload["w"], payload["x"], payload["y"], payload["z"])

    def __repr__(self) -> str:
        return (f"quat({fr_str(self.w)}, {fr_str(self.x)}, "
                f"{fr_str(self.y)}, {fr_str(self.z)})")


def quat(w: Rational | str = 0, x: Rational | str = 0,
         y: Rational | str = 0, z: Rational | str = 0) -> RationalQuaternion:
    return RationalQuaternion(fr(w), fr(x), fr(y), fr(z))


ONE = quat(1)
I = quat(0, 1)
J = quat(0, 0, 1)
K = quat(0, 0, 0, 1)

# reference tetrahedron vertices, one on each body diagonal of [-1,1]^3
VERTS: tuple[tuple[int, int, int], ...] = (
    (1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1),
)

# body-diagonal quaternions, signs normalized to first nonzero positive
DIAGONALS: tuple[RationalQuaternion, ...] = (
    quat(0, 1, 1, 1), quat(0, 1, -1, -1), quat(0, 1, -1, 1), quat(0, 1, 1, -1),
)

EDGE_QUATS: tuple[RationalQuaternion, ...] = (
    quat(0, 1, 1, 0), quat(0, 1, -1, 0),
    quat(0, 0, 1, 1), quat(0, 0, 1, -1),
    quat(0, 1, 0, 1), quat(0, 1, 0, -1),
)


@dataclass(frozen=True)
class Rotation3:
    """A 3x3 exact orthogonal matrix; column j is the image of axis j."""

    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.matrix) != 3 or any(len(r) != 3 for r in self.matrix):
            raise ValueError("rotation matrices are 3x3")

    @classmethod
    def identity(cls) -> "Rotation3":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(3))
                         for i in range(3)))

    def apply(self, v: Sequence[Rational]) -> tuple[Fraction, ...]:
        return tuple(sum(self.matrix[i][j] * fr(v[j]) for j in range(3))
                     for i in range(3))

    def compose(self, other: "Rotation3") -> "Rotation3":
        om = other.matrix
        return Rotation3(tuple(
            tuple(sum(self.matrix[i][k] * om[k][j] for k in range(3))
                  for j in range(3))
            for i in range(3)
        ))

    def determinant(self) -> Fraction:
        m = self.matrix
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    def is_orthogonal(self) -> bool:
        for i in range(3):
            for j in range(i, 3):
                dot = sum(self.matrix[k][i] * self.matrix[k][j]
                          for k in range(3))
                if dot != (1 if i == j else 0):
                    return False
        return True

    def __neg__(self) -> "Rotation3":
        return Rotation3(tuple(tuple(-x for x in row) for row in self.matrix))

    def to_json(self) -> list[list[str]]:
        return [[fr_str(x) for x in row] for row in self.matrix]

    @classmethod
    def from_json(cls, payload: Sequence[Sequence[str]]) -> "Rotation3":
        return cls(tuple(tuple(fr(s) for s in row) for row in payload))


def conjugation_rotation(q: RationalQuaternion) -> Rotation3:
    """The rotation v -> q v q^-1 on the imaginary part; scale-invariant."""
    n = q.norm()
    if n == 0:
        raise ValueError("zero quaternion gives no rotation")
    qc = q.conjugate()
    cols = []
    for axis in (I, J, K):
        image = q * axis * qc
        cols.append((image.x / n, image.y / n, image.z / n))
    return Rotation3(tuple(tuple(cols[j][i] for j in range(3))
                           for i in range(3)))


class ClosureCapExceeded(RuntimeError):
    """Group closure grew past the requested cap (non-finite input)."""


def closure(generators: Iterable[Rotation3], cap: int) -> set[Rotation3]:
    """Close a set of rotations under composition, up to cap elements."""
    seen: set[Rotation3] = {Rotation3.identity()}
    gens = list(generators)
    seen.update(gens)
    frontier = list(seen)
    while frontier:
        new: list[Rotation3] = []
        for r in frontier:
            for g in gens:
                prod = r.compose(g)
                if prod not in seen:
                    seen.add(prod)
                    new.append(prod)
                    if len(seen) > cap:
                        raise ClosureCapExceeded(
                            f"closure exceeded {cap} elements"
                        )
        frontier = new
    return seen


def binary_tetrahedral() -> tuple[RationalQuaternion, ...]:
    """The 24 unit Hurwitz quaternions."""
    units: list[RationalQuaternion] = []
    for base in (ONE, I, J, K):
        units.extend((base, -base))
    half = Fraction(1, 2)
    for sw in (half, -half):
        for sx in (half, -half):
            for sy in (half, -half):
                for sz in (half, -half):
                    units.append(RationalQuaternion(sw, sx, sy, sz))
    return tuple(units)


def diagonal_permutation(r: Rotation3) -> tuple[int, ...]:
    """How a cube rotation permutes the four body diagonals."""
    perm = []
    for a in range(4):
        image = r.apply(VERTS[a])
        for b in range(4):
            if image == tuple(map(Fraction, VERTS[b])):
                perm.append(b)
                break
            if image == tuple(-Fraction(c) for c in VERTS[b]):
                perm.append(b)
                break
        else:
            raise ValueError("rotation does not preserve the diagonals")
    if sorted(perm) != [0, 1, 2, 3]:
        raise ValueError("diagonal action is not a permutation")
    return tuple(perm)


def gbar_assignment() -> dict[tuple[int, int], RationalQuaternion]:
    """Quaternion (up to sign) for each involution g_ab.

    g_a4 maps to the diagonal through vertex a; g_ab with a,b <= 3 maps to
    the edge quaternion whose rotation swaps diagonals a and b.
    """
    table: dict[tuple[int, int], RationalQuaternion] = {}
    for a in range(4):
        table[(a, 4)] = DIAGONALS[a]
    for e in EDGE_QUATS:
        perm = diagonal_permutation(conjugation_rotation(e))
        moved = [a for a in range(4) if perm[a] != a]
        if len(moved) != 2:
            raise AssertionError("edge rotation must swap two diagonals")
        table[(moved[0], moved[1])] = e
    return table


def generator_rotation(a: int, b: int) -> Rotation3:
    key = (min(a, b), max(a, b))
    return conjugation_rotation(gbar_assignment()[key])


@cache
def perm_quaternions() -> dict[tuple[int, ...], RationalQuaternion]:
    """One quaternion per permutation of the four diagonals, built as a
    product of edge quaternions (well-defined up to sign and scale)."""
    edges = [q for (a, b), q in gbar_assignment().items() if b != 4]
    table = {(0, 1, 2, 3): ONE}
    frontier = [(0, 1, 2, 3)]
    while frontier:
        nxt = []
        for perm in frontier:
            for e in edges:
                q = e * table[perm]
                p = diagonal_permutation(conjugation_rotation(q))
                if p not in table:
                    table[p] = q
                    nxt.append(p)
        frontier = nxt
    if len(table) != 24:
        raise AssertionError("edge products must realize all permutations")
    return table


def word_quaternion(free: Sequence[int], perm: Sequence[int]) -> \
        RationalQuaternion:
    """Quaternion representing the group element with the given reduced
    letters and permutation part (diagonal product times a permutation
    quaternion; canonical up to sign and scale)."""
    q = ONE
    for a in free:
        q = q * DIAGONALS[a]
    return q * perm_quaternions()[tuple(perm)]


def verify_equivariance() -> bool:
    """Conjugation by a transposition rotation relabels all ten involutions
    by the transposition on subscripts (4 stays fixed)."""
    table = gbar_assignment()
    rot = {key: conjugation_rotation(q) for key, q in table.items()}
    for (a, b), r in rot.items():
        if b == 4:
            continue  # only the permutation part normalizes the ten
        swap = {a: b, b: a}
        for (c, d), s in rot.items():
            cc, dd = swap.get(c, c), swap.get(d, d)
            key = (min(cc, dd), max(cc, dd))
            if r.compose(s).compose(r) != rot[key]:
                # r is an involution, so r s r^-1 = r s r
                return False
    return True


def facet_reflection(a: int) -> Rotation3:
    """Reflection across the plane through the origin orthogonal to
    diagonal a: the negated half-turn about that diagonal (det -1)."""
    if a not in (0, 1, 2, 3):
        raise ValueError("facet index must be 0..3")
    return -conjugation_rotation(DIAGONALS[a])


# mod-3 splitting of the quaternion algebra (sqrt(-2) = 1 mod 3):
# i -> [[0,-1],[1,0]], j -> [[1,1],[1,-1]], k = ij -> [[-1,1],[1,1]]
_F3_I = ((0, 2), (1, 0))
_F3_J = ((1, 1), (1, 2))
_F3_K = ((2, 1), (1, 1))


def _mod3(x: Fraction) -> int:
    if x.denominator % 3 == 0:
        raise ValueError("denominator divisible by 3")
    return (x.numerator * pow(x.denominator, -1, 3)) % 3


def sl2f3_image(q: RationalQuaternion) -> tuple[tuple[int, ...], ...]:
    """The 2x2 matrix over F_3 splitting q (denominators prime to 3)."""
    w, x, y, z = (_mod3(c) for c in q.coefficients())
    out = [[0, 0], [0, 0]]
    for r in range(2):
        for c in range(2):
            out[r][c] = (w * (1 if r == c else 0)
                         + x * _F3_I[r][c] + y * _F3_J[r][c]
                         + z * _F3_K[r][c]) % 3
    return tuple(tuple(row) for row in out)


def sl2f3_check() -> bool:
    """The 24 unit Hurwitz quaternions map bijectively onto SL_2(F_3)."""
    images = set()
    for q in binary_tetrahedral():
        m = sl2f3_image(q)
        det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % 3
        if det != 1:
            return False
        images.add(m)
    return len(images) == 24


# Display-only table of the standard complex splitting; the exact
# computational splitting is 3-adic (see the tree module).
COMPLEX_MODEL_TABLE: dict[str, tuple[tuple[str, str], tuple[str, str]]] = {
    "1": (("1", "0"), ("0", "1")),
    "i": (("i", "0"), ("0", "-i")),
    "j": (("0", "1"), ("-1", "0")),
    "k": (("0", "i"), ("i", "0")),
}
