"""The Coxeter polytope cut out by the twenty distinguished roots.

P = { x : x.U_ab >= 0 and x.alpha_ab >= 0 for all pairs }.  Its diagram has
20 nodes: the U_ab form a Petersen graph (single edges join disjoint pairs),
the alpha_ab form the complementary graph (single edges join pairs sharing
exactly one index), and each U_ab is joined to its own alpha_ab by a double
edge.  There are no other U-alpha edges, which is exactly what makes the
parity character well-defined.

Cusps of P are the maximal rank-8 parabolic subdiagrams: orthogonal unions of
affine components whose ranks add to 8.  `classify_cusps` enumerates them all
and groups them into orbits under the index-permutation action.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import gcd
from typing import Iterable, Sequence

from . import lattice as L

Node = tuple[str, tuple[int, int]]

#: All 20 diagram nodes: the ten U (lex order) then the ten alpha.
NODES: tuple[Node, ...] = tuple(
    [("U", p) for p in L.PAIRS] + [("alpha", p) for p in L.PAIRS]
)
NODE_INDEX: dict[Node, int] = {n: i for i, n in enumerate(NODES)}


def node_vector(node: Node) -> L.LatticeVector:
    kind, (a, b) = node
    return L.U(a, b) if kind == "U" else L.alpha(a, b)


def node_label(node: Node) -> str:
    kind, (a, b) = node
    return f"{kind}{a}{b}"


def parse_node_label(label: str) -> Node:
    for kind in ("U", "alpha"):
        if label.startswith(kind) and len(label) == len(kind) + 2:
            return (kind, L.pair(int(label[-2]), int(label[-1])))
    raise ValueError(f"not a node label: {label!r}")


@lru_cache(maxsize=1)
def node_gram() -> tuple[tuple[int, ...], ...]:
    """Integer Gram matrix of the 20 node roots."""
    vecs = [node_vector(n) for n in NODES]
    return tuple(
        tuple(int(L.inner_product(v, w)) for w in vecs) for v in vecs
    )


def edge_multiplicity(n1: Node, n2: Node) -> int:
    """Diagram edge weight: 0 (orthogonal), 1 (single), or 2 (double)."""
    value = node_gram()[NODE_INDEX[n1]][NODE_INDEX[n2]]
    if n1 == n2 or value not in (0, 1, 2):
        raise ValueError(f"not distinct diagram nodes: {n1}, {n2}")
    return value


@dataclass(frozen=True)
class Diagram:
    """The 20-node diagram: adjacency with edge multiplicities."""

    single_edges: frozenset[frozenset[int]]
    double_edges: frozenset[frozenset[int]]

    def neighbors(self, i: int) -> tuple[int, ...]:
        out = []
        for j in range(len(NODES)):
            if j != i and (frozenset((i, j)) in self.single_edges
                           or frozenset((i, j)) in self.double_edges):
                out.append(j)
        return tuple(out)


@lru_cache(maxsize=1)
def build_diagram() -> Diagram:
    gram = node_gram()
    single, double = set(), set()
    for i in range(len(NODES)):
        for j in range(i + 1, len(NODES)):
            if gram[i][j] == 1:
                single.add(frozenset((i, j)))
            elif gram[i][j] == 2:
                double.add(frozenset((i, j)))
    return Diagram(frozenset(single), frozenset(double))


def in_polytope(v: L.LatticeVector) -> bool:
    """Whether v pairs nonnegatively with all twenty wall roots."""
    return all(L.inner_product(v, node_vector(n)) >= 0 for n in NODES)


def wall_pairings(v: L.LatticeVector) -> dict[str, Fraction]:
    """Pairings of v with every wall root, keyed by node label."""
    return {node_label(n): L.inner_product(v, node_vector(n)) for n in NODES}


# ---------------------------------------------------------------------------
# Parity character


def _root_kind(item: Node | str) -> str:
    node = parse_node_label(item) if isinstance(item, str) else item
    if node not in NODE_INDEX:
        raise ValueError(f"not a diagram node: {item!r}")
    return node[0]


def parity_character(
    reflections: Iterable[Node | str], perm: Sequence[int] | None = None
) -> tuple[int, int]:
    """Character to (Z/2)^2: U-reflections count in the first slot,
    alpha-reflections in the second, index permutations count as zero."""
    if perm is not None and sorted(perm) != list(range(5)):
        raise ValueError(f"not a permutation of 0..4: {perm}")
    u_count = alpha_count = 0
    for item in reflections:
        if _root_kind(item) == "U":
            u_count += 1
        else:
            alpha_count += 1
    return (u_count % 2, alpha_count % 2)


def verify_parity_well_defined(
    single_edges: frozenset[frozenset[int]] | None = None,
) -> bool:
    """The character is well-defined iff every single edge joins two nodes of
    the same kind (braid relations force equal values across single edges;
    commuting and unjoined pairs impose nothing)."""
    if single_edges is None:
        single_edges = build_diagram().single_edges
    for edge in single_edges:
        i, j = tuple(edge)
        if NODES[i][0] != NODES[j][0]:
            return False
    return True


# ---------------------------------------------------------------------------
# Affine components and cusp classification


def _classify_connected(nodes: frozenset[int]) -> tuple[str, str]:
    """Classify a connected induced subdiagram as ('spherical'|'affine'|
    'indefinite', type-name).  Pure graph combinatorics (ADE shapes)."""
    n = len(nodes)
    diagram = build_diagram()
    doubles = [e for e in diagram.double_edges if e <= nodes]
    if doubles:
        return ("affine", "A~1") if n == 2 else ("indefinite", "")
    if n == 1:
        return ("spherical", "A1")
    adj = {i: [j for j in nodes if j != i and frozenset((i, j)) in diagram.single_edges]
           for i in nodes}
    m = sum(len(v) for v in adj.values()) // 2
    degrees = sorted(len(v) for v in adj.values())
    if m >= n + 1:
        return ("indefinite", "")
    if m == n:
        if degrees[-1] == 2:
            return ("affine", f"A~{n - 1}")
        return ("indefinite", "")
    # tree: m == n - 1
    if degrees[-1] >= 5:
        return ("indefinite", "")
    if degrees[-1] == 4:
        if n == 5:
            return ("affine", "D~4")
        return ("indefinite", "")
    branch = [i for i in nodes if len(adj[i]) == 3]
    if not branch:
        return ("spherical", f"A{n}")
    if len(branch) == 1:
        b = branch[0]
        arms = sorted(_arm_length(adj, b, first) for first in adj[b])
        if arms[0] == 1 and arms[1] == 1:
            return ("spherical", f"D{n}")
        if arms in ([1, 2, 2], [1, 2, 3], [1, 2, 4]):
            return ("spherical", f"E{n}")
        if arms == [2, 2, 2]:
            return ("affine", "E~6")
        if arms == [1, 3, 3]:
            return ("affine", "E~7")
        if arms == [1, 2, 5]:
            return ("affine", "E~8")
        return ("indefinite", "")
    if len(branch) == 2:
        leaf_arms = 0
        for b in branch:
            leaf_arms += sum(
                1 for u in adj[b] if len(adj[u]) == 1
            )
        if leaf_arms == 4:
            return ("affine", f"D~{n - 1}")
        return ("indefinite", "")
    return ("indefinite", "")


def _arm_length(adj: dict[int, list[int]], branch: int, first: int) -> int:
    length, prev, cur = 1, branch, first
    while True:
        nxt = [x for x in adj[cur] if x != prev]
        if not nxt:
            return length
        prev, cur = cur, nxt[0]
        length += 1


@lru_cache(maxsize=1)
def affine_components() -> tuple[tuple[frozenset[int], str], ...]:
    """Every connected induced subdiagram of affine type.

    Grown one node at a time through connected spherical subdiagrams: every
    proper connected subdiagram of a spherical or affine diagram is spherical,
    and every extension of an affine or indefinite diagram is indefinite, so
    pruning at non-spherical sets enumerates all affine components exactly once.
    """
    diagram = build_diagram()
    n = len(NODES)
    adjacency = {i: set(diagram.neighbors(i)) for i in range(n)}
    found: list[tuple[frozenset[int], str]] = []

    def grow(current: frozenset[int], candidates: list[int], banned: set[int]) -> None:
        local_banned = set(banned)
        for idx, u in enumerate(candidates):
            if u in local_banned:
                continue
            extended = current | {u}
            status, name = _classify_connected(extended)
            if status == "affine":
                found.append((extended, name))
            elif status == "spherical":
                new_candidates = candidates[idx + 1:] + [
                    v for v in adjacency[u]
                    if v > min(extended) and v not in extended
                    and v not in candidates[idx + 1:]
                ]
                grow(extended, new_candidates, local_banned)
            local_banned.add(u)

    for root in range(n):
        grow(frozenset([root]), sorted(v for v in adjacency[root] if v > root),
             set())
    return tuple(found)


def _affine_rank(component: frozenset[int]) -> int:
    return len(component) - 1


@dataclass(frozen=True)
class ParabolicClass:
    """A maximal rank-8 parabolic subdiagram (a cusp of the polytope)."""

    components: tuple[tuple[Node, ...], ...]
    component_types: tuple[str, ...]
    orbit_type: str
    null_vector: L.LatticeVector

    @property
    def nodes(self) -> tuple[Node, ...]:
        return tuple(n for comp in self.components for n in comp)

    def to_json(self) -> dict:
        return {
            "orbit_type": self.orbit_type,
            "component_types": list(self.component_types),
            "node_labels": [node_label(n) for n in self.nodes],
            "null_vector": self.null_vector.to_json(),
        }


def _type_sort_key(name: str) -> tuple[int, str]:
    return (-int(name.split("~")[1]), name)


def _orbit_type(names: Iterable[str]) -> str:
    return "+".join(sorted(names, key=_type_sort_key))


def _component_null_vector(component: frozenset[int]) -> L.LatticeVector:
    """The primitive isotropic vector supported on one affine component."""
    idx = sorted(component)
    gram = [[Fraction(node_gram()[i][j]) for j in idx] for i in idx]
    k = len(idx)
    # kernel of the (corank-1) Gram: solve by elimination with a free last pivot
    mat = [row[:] for row in gram]
    cols = list(range(k))
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in cols:
        piv = next((i for i in range(r, k) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(k):
            if i != r and mat[i][c]:
                factor = mat[i][c]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[r])]
        pivots.append((r, c))
        r += 1
    free = [c for c in cols if c not in {c for _, c in pivots}]
    if len(free) != 1:
        raise RuntimeError("affine component Gram must have corank 1")
    x = [Fraction(0)] * k
    x[free[0]] = Fraction(1)
    for r_, c_ in pivots:
        x[c_] = -mat[r_][free[0]]
    denom_lcm = 1
    for v in x:
        denom_lcm = denom_lcm * v.denominator // gcd(denom_lcm, v.denominator)
    marks = [int(v * denom_lcm) for v in x]
    g = 0
    for m in marks:
        g = gcd(g, m)
    marks = [m // g for m in marks]
    if all(m < 0 for m in marks):
        marks = [-m for m in marks]
    if any(m <= 0 for m in marks):
        raise RuntimeError("affine marks must be positive")
    out = L.ZERO
    for mark, i in zip(marks, idx):
        out = out + mark * node_vector(NODES[i])
    return _primitive_in_lattice(out)


def _primitive_in_lattice(v: L.LatticeVector) -> L.LatticeVector:
    coords = L.basis_coordinates(v)
    denom_lcm = 1
    for c in coords:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in coords]
    g = 0
    for c in ints:
        g = gcd(g, c)
    scaled = v * Fraction(denom_lcm, g)
    if L.inner_product(scaled, L.delta()) < 0:
        scaled = -scaled
    return scaled


def _proportional(v: L.LatticeVector, w: L.LatticeVector) -> bool:
    i = next((k for k, x in enumerate(v.coords) if x), None)
    if i is None:
        return w.is_zero()
    ratio = w.coords[i] / v.coords[i]
    return w == ratio * v


@lru_cache(maxsize=1)
def classify_cusps() -> tuple[ParabolicClass, ...]:
    """All maximal rank-8 parabolic subdiagrams of the polytope."""
    comps = sorted(affine_components(), key=lambda cn: sorted(cn[0]))
    n = len(comps)
    masks = [sum(1 << i for i in comp) for comp, _ in comps]
    adjacency = {i: set(build_diagram().neighbors(i)) for i in range(len(NODES))}
    closed = [
        mask | sum(1 << j for j in {j for i in comp for j in adjacency[i]})
        for (comp, _), mask in zip(comps, masks)
    ]
    ranks = [_affine_rank(comp) for comp, _ in comps]
    suffix_max = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_max[i] = suffix_max[i + 1] + ranks[i]

    results: list[ParabolicClass] = []

    def backtrack(idx: int, used_mask: int, used_closed: int,
                  rank: int, chosen: list[int]) -> None:
        if rank == 8:
            results.append(_make_class([comps[i] for i in chosen]))
            return
        if idx == n or rank + suffix_max[idx] < 8:
            return
        if rank + ranks[idx] <= 8 and not (closed[idx] & used_mask) \
                and not (masks[idx] & used_closed):
            backtrack(idx + 1, used_mask | masks[idx],
                      used_closed | closed[idx], rank + ranks[idx],
                      chosen + [idx])
        backtrack(idx + 1, used_mask, used_closed, rank, chosen)

    backtrack(0, 0, 0, 0, [])
    results.sort(key=lambda c: (c.orbit_type, tuple(sorted(
        NODE_INDEX[nd] for nd in c.nodes))))
    return tuple(results)


def _make_class(parts: list[tuple[frozenset[int], str]]) -> ParabolicClass:
    parts = sorted(parts, key=lambda cn: (_type_sort_key(cn[1]), sorted(cn[0])))
    nulls = [_component_null_vector(comp) for comp, _ in parts]
    for other in nulls[1:]:
        if not _proportional(nulls[0], other):
            raise RuntimeError("cusp components with non-proportional nulls")
    return ParabolicClass(
        components=tuple(
            tuple(NODES[i] for i in sorted(comp)) for comp, _ in parts
        ),
        component_types=tuple(name for _, name in parts),
        orbit_type=_orbit_type(name for _, name in parts),
        null_vector=nulls[0],
    )


def permute_node(perm: Sequence[int], node: Node) -> Node:
    kind, (a, b) = node
    return (kind, L.pair(perm[a], perm[b]))


def orbit_key(nodes: Iterable[Node]) -> tuple[int, ...]:
    """Canonical representative of a node set under index permutations."""
    node_list = list(nodes)
    best = None
    for perm in permutations(range(5)):
        image = tuple(sorted(NODE_INDEX[permute_node(perm, n)] for n in node_list))
        if best is None or image < best:
            best = image
    return best  # type: ignore[return-value]


def cusp_orbits() -> dict[str, list[ParabolicClass]]:
    """Cusps grouped by orbit type; each group is one permutation orbit."""
    groups: dict[str, list[ParabolicClass]] = {}
    for cusp in classify_cusps():
        groups.setdefault(cusp.orbit_type, []).append(cusp)
    return groups


def e6_class_nodes(a: int, b: int) -> tuple[tuple[Node, ...], tuple[Node, ...]]:
    """The branch-and-arms component and triangle component of the cusp
    attached to the ordered pair (a, b)."""
    if a == b or not (0 <= a <= 4 and 0 <= b <= 4):
        raise ValueError(f"need two distinct indices in 0..4, got {a}, {b}")
    c, d, e = L.complement(a, b)
    e6 = (("U", L.pair(a, b)),
          ("U", L.pair(c, d)), ("U", L.pair(d, e)), ("U", L.pair(e, c)),
          ("U", L.pair(a, e)), ("U", L.pair(a, c)), ("U", L.pair(a, d)))
    a2 = (("alpha", L.pair(b, c)), ("alpha", L.pair(b, d)),
          ("alpha", L.pair(b, e)))
    return e6, a2
