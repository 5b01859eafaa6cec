"""The tetrahedron-reflection game with exact pose tracking.

The reference tetrahedron has vertices (1,1,1), (1,-1,-1), (-1,1,-1),
(-1,-1,1).  A facet move reflects the solid across the plane of the facet
opposite one vertex (for vertex (1,1,1) that plane is x+y+z = -1); a
symmetry move applies the automorphism of the tetrahedron inducing a given
vertex permutation.  Every pose reached lies over Z[1/3], so poses compare
exactly and the return path is forced: retrace the reduced word backwards.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from typing import Iterable, Sequence

from .autgroup import ALL_PERMS, GroupWord, IDENTITY_PERM
from .quaternions import VERTS, facet_reflection
from .ratio import Rational, fr, fr_str

REFERENCE_VERTICES = tuple(tuple(Fraction(x) for x in v) for v in VERTS)

_MOVE_RE = re.compile(r"^(?:F([0-3])|S=\(([0-3]{4})\))$")


def _mat_vec(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(3)) for i in range(3))


def _mat_mul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(3))
                       for j in range(3)) for i in range(3))


_ID3 = tuple(tuple(Fraction(int(i == j)) for j in range(3))
             for i in range(3))


@dataclass(frozen=True)
class Pose:
    """Affine isometry p -> linear*p + translation over Z[1/3]."""

    linear: tuple[tuple[Fraction, ...], ...]
    translation: tuple[Fraction, ...]

    @classmethod
    def identity(cls) -> "Pose":
        return cls(_ID3, (Fraction(0),) * 3)

    def apply(self, point: Sequence[Rational]) -> tuple[Fraction, ...]:
        p = tuple(fr(x) for x in point)
        moved = _mat_vec(self.linear, p)
        return tuple(moved[i] + self.translation[i] for i in range(3))

    def compose(self, other: "Pose") -> "Pose":
        """self after other."""
        return Pose(_mat_mul(self.linear, other.linear),
                    tuple(x + y for x, y in
                          zip(_mat_vec(self.linear, other.translation),
                              self.translation)))

    def determinant(self) -> Fraction:
        m = self.linear
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    def is_isometry(self) -> bool:
        m = self.linear
        for i in range(3):
            for j in range(i, 3):
                dot = sum(m[k][i] * m[k][j] for k in range(3))
                if dot != (1 if i == j else 0):
                    return False
        return True

    def vertex_images(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(self.apply(v) for v in REFERENCE_VERTICES)

    def to_json(self) -> dict:
        return {"linear": [[fr_str(x) for x in row] for row in self.linear],
                "translation": [fr_str(x) for x in self.translation]}

    @classmethod
    def from_json(cls, data: dict) -> "Pose":
        return cls(tuple(tuple(fr(x) for x in row)
                         for row in data["linear"]),
                   tuple(fr(x) for x in data["translation"]))


IDENTITY_POSE = Pose.identity()


@cache
def facet_move(a: int) -> Pose:
    """Affine reflection across the reference facet opposite vertex a."""
    if a not in (0, 1, 2, 3):
        raise ValueError("facet index must be 0..3")
    linear = facet_reflection(a).matrix
    vertex = REFERENCE_VERTICES[a]
    # plane x . vertex = -1; reflection adds -(2/3)(x . vertex + 1) vertex
    translation = tuple(-Fraction(2, 3) * x for x in vertex)
    return Pose(linear, translation)


def _invert3(m):
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    if det == 0:
        raise ValueError("singular matrix")
    # cyclic-index minors: the adjugate entry with its sign built in
    adj = tuple(tuple(
        m[(j + 1) % 3][(i + 1) % 3] * m[(j + 2) % 3][(i + 2) % 3]
        - m[(j + 1) % 3][(i + 2) % 3] * m[(j + 2) % 3][(i + 1) % 3]
        for j in range(3)) for i in range(3))
    return tuple(tuple(x / det for x in row) for row in adj)


@cache
def symmetry_move(perm: tuple[int, int, int, int]) -> Pose:
    """The unique orthogonal map sending vertex a to vertex perm[a].

    Even permutations are rotations; odd ones are improper (determinant -1),
    which is what conjugation onto the facet reflections requires.
    """
    if perm not in ALL_PERMS:
        raise ValueError("not a permutation of 0..3")
    source = tuple(tuple(REFERENCE_VERTICES[j][i] for j in range(3))
                   for i in range(3))
    target = tuple(tuple(REFERENCE_VERTICES[perm[j]][i] for j in range(3))
                   for i in range(3))
    linear = _mat_mul(target, _invert3(source))
    pose = Pose(linear, (Fraction(0),) * 3)
    if pose.vertex_images() != tuple(REFERENCE_VERTICES[perm[a]]
                                     for a in range(4)):
        raise AssertionError("vertex correspondence failed")
    return pose


def format_move(move: int | tuple[int, ...]) -> str:
    if isinstance(move, int):
        if move not in (0, 1, 2, 3):
            raise ValueError("facet index must be 0..3")
        return f"F{move}"
    perm = tuple(move)
    if perm not in ALL_PERMS:
        raise ValueError("not a permutation of 0..3")
    return "S=(" + "".join(str(x) for x in perm) + ")"


def parse_move(token: str) -> int | tuple[int, ...]:
    m = _MOVE_RE.match(token.strip())
    if not m:
        raise ValueError(f"invalid move token: {token!r}")
    if m.group(1) is not None:
        return int(m.group(1))
    perm = tuple(int(ch) for ch in m.group(2))
    if perm not in ALL_PERMS:
        raise ValueError(f"invalid move token: {token!r}")
    return perm


def move_pose(move: int | tuple[int, ...]) -> Pose:
    if isinstance(move, int):
        return facet_move(move)
    return symmetry_move(tuple(move))


def move_word(move: int | tuple[int, ...]) -> GroupWord:
    if isinstance(move, int):
        return GroupWord.letter(move)
    return GroupWord((), tuple(move))


@dataclass(frozen=True)
class GameState:
    pose: Pose
    history: tuple[str, ...]
    word: GroupWord

    @classmethod
    def initial(cls) -> "GameState":
        return cls(IDENTITY_POSE, (), GroupWord.identity())

    def is_solved(self) -> bool:
        return self.pose == IDENTITY_POSE

    def to_json(self) -> dict:
        return {"pose": self.pose.to_json(),
                "history": list(self.history),
                "word": self.word.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "GameState":
        return cls(Pose.from_json(data["pose"]),
                   tuple(data["history"]),
                   GroupWord.from_json(data["word"]))


def apply_move(state: GameState, move: int | tuple[int, ...] | str
               ) -> GameState:
    """Compose the reflection across the current pose's facet plane (or the
    symmetry about the current center): right-composition of the reference
    move, mirrored by right-multiplying the word."""
    if isinstance(move, str):
        move = parse_move(move)
    return GameState(state.pose.compose(move_pose(move)),
                     state.history + (format_move(move),),
                     state.word * move_word(move))


def apply_moves(state: GameState, moves: Iterable[int | tuple[int, ...] | str]
                ) -> GameState:
    for move in moves:
        state = apply_move(state, move)
    return state


def word_pose(word: GroupWord) -> Pose:
    pose = IDENTITY_POSE
    for a in word.free:
        pose = pose.compose(facet_move(a))
    if word.perm != IDENTITY_PERM:
        pose = pose.compose(symmetry_move(word.perm))
    return pose


def solve(state: GameState) -> list[str]:
    """The forced return path: undo the reduced word from its far end.

    Facet moves replay the free part backwards through the inverse
    permutation; a final symmetry move clears the permutation part.
    """
    inverse = {v: k for k, v in enumerate(state.word.perm)}
    moves = [format_move(inverse[a]) for a in reversed(state.word.free)]
    if state.word.perm != IDENTITY_PERM:
        moves.append(format_move(tuple(inverse[i] for i in range(4))))
    return moves


def scramble(length: int, seed: int | None = None) -> GameState:
    """Seeded facet-move scramble that never plays the immediate inverse
    (a facet is its own inverse), so the word length equals the move count."""
    rng = random.Random(seed)
    state = GameState.initial()
    last = None
    for _ in range(length):
        choices = [a for a in range(4) if a != last]
        last = rng.choice(choices)
        state = apply_move(state, last)
    return state


@cache
def _pose_table(max_len: int) -> dict[Pose, GroupWord]:
    """Pose -> reduced word over all words of length <= max_len; raises on
    any collision (the action on poses is faithful at this range)."""
    table: dict[Pose, GroupWord] = {}
    frontier: list[tuple[GroupWord, Pose]] = []
    for perm in ALL_PERMS:
        word = GroupWord((), perm)
        pose = word_pose(word)
        if pose in table:
            raise AssertionError("pose collision in lookup table")
        table[pose] = word
        frontier.append((word, pose))
    for _ in range(max_len):
        nxt = []
        for word, pose in frontier:
            for a in range(4):
                if word.free and word.free[-1] == a:
                    continue
                # letters append left of the permutation part, so the pose
                # picks up the facet conjugated through it
                longer = GroupWord(word.free + (a,), word.perm)
                extended = pose.compose(facet_move(word.perm.index(a)))
                nxt.append((longer, extended))
        for word, pose in nxt:
            if pose in table:
                raise AssertionError("pose collision in lookup table")
            table[pose] = word
        frontier = nxt
    return table


def pose_to_word(pose: Pose, max_len: int = 5) -> GroupWord | None:
    """Look the pose up among all reduced words of length <= max_len."""
    if max_len > 12:
        raise ValueError("lookup bound too large")
    return _pose_table(max_len).get(pose)


def check_pose_injectivity(max_len: int = 5) -> tuple[bool, int]:
    """Table build doubles as an exhaustive collision check."""
    try:
        table = _pose_table(max_len)
    except AssertionError:
        return (False, 0)
    return (True, len(table))


def check_linear_injectivity(max_len: int = 6) -> tuple[bool, int]:
    """Distinct reduced words give distinct linear parts up to max_len."""
    seen: dict[tuple, GroupWord] = {}
    frontier: list[tuple[GroupWord, Pose]] = []
    for perm in ALL_PERMS:
        word = GroupWord((), perm)
        pose = word_pose(word)
        if pose.linear in seen:
            return (False, len(seen))
        seen[pose.linear] = word
        frontier.append((word, pose))
    count = len(frontier)
    for _ in range(max_len):
        nxt = []
        for word, pose in frontier:
            for a in range(4):
                if word.free and word.free[-1] == a:
                    continue
                longer = GroupWord(word.free + (a,), word.perm)
                extended = pose.compose(facet_move(word.perm.index(a)))
                nxt.append((longer, extended))
        for word, pose in nxt:
            if pose.linear in seen:
                return (False, len(seen))
            seen[pose.linear] = word
        frontier = nxt
        count += len(nxt)
    return (True, count)
