"""Named verification suites covering every model, with timed reports.

Each suite runs a battery of exact checks and returns a VerifyReport whose
checks carry stable names, a pass/fail status, and a human-readable detail
string.  The full battery is the product's acceptance surface.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import autgroup as ag
from . import coxeter as cx
from . import game as gm
from . import lattice as lt
from . import quaternions as qt
from . import tree as tr
from .padic import DEFAULT_PRECISION, Padic3, sqrt_minus_two
from .ratio import fr_str


@dataclass
class VerifyReport:
    suite: str
    checks: list[dict]
    runtime_ms: int

    @property
    def passed(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks)

    def to_json(self) -> dict:
        return {"suite": self.suite, "passed": self.passed,
                "checks": self.checks, "runtime_ms": self.runtime_ms}

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            mark = "PASS" if c["status"] == "pass" else "FAIL"
            out.append(f"[{mark}] {self.suite}/{c['name']} - {c['details']}")
        return out


class _Suite:
    def __init__(self, name: str):
        self.name = name
        self.checks: list[dict] = []
        self.start = time.perf_counter()

    def check(self, name: str, ok: bool, details: str) -> None:
        self.checks.append({"name": name,
                            "status": "pass" if ok else "fail",
                            "details": details})

    def report(self) -> VerifyReport:
        ms = int((time.perf_counter() - self.start) * 1000)
        return VerifyReport(self.name, self.checks, ms)


# --------------------------------------------------------------------------
# lattice

def _expected_root_pairing(n1, n2) -> int:
    k1, p1 = n1
    k2, p2 = n2
    shared = len(set(p1) & set(p2))
    if k1 == k2 == "U":
        return -2 if shared == 2 else (1 if shared == 0 else 0)
    if k1 == k2 == "alpha":
        return -2 if shared == 2 else (1 if shared == 1 else 0)
    return 2 if shared == 2 else 0


def verify_lattice() -> VerifyReport:
    suite = _Suite("lattice")

    entries = 0
    ok = True
    for n1 in cx.NODES:
        for n2 in cx.NODES:
            got = lt.inner_product(cx.node_vector(n1), cx.node_vector(n2))
            if got != _expected_root_pairing(n1, n2):
                ok = False
            entries += 1
    suite.check("gram-table-400-entries", ok and entries == 400,
                f"{entries} pairings match the closed form")

    basis = lt.integral_basis()
    gram = lt.gram_matrix(basis)
    even = all(gram[i][i] % 2 == 0 for i in range(10))
    det = lt.determinant(gram)
    sig = lt.signature(gram)
    suite.check("integral-basis-even-unimodular",
                even and det == -1 and sig == (1, 9, 0),
                f"det {det}, signature {sig}, even diagonal {even}")

    d = lt.delta()
    ok = lt.inner_product(d, d) == 10
    for a, b in lt.PAIRS:
        ok = ok and lt.inner_product(d, lt.U(a, b)) == 1
        ok = ok and lt.inner_product(d, lt.alpha(a, b)) == 2
        ok = ok and lt.inner_product(d, lt.f(a, b)) == 3
    suite.check("delta-battery", ok,
                "delta^2 = 10 and pairings 1/2/3 with U/alpha/f")

    ok = True
    for a in range(5):
        for b in range(5):
            if a == b:
                continue
            n = lt.nu(a, b)
            half = Fraction(1, 2) * n
            ok = ok and lt.inner_product(n, n) == 0
            ok = ok and lt.inner_product(n, d) > 0
            ok = ok and lt.in_lattice(n) and lt.in_lattice(half)
    suite.check("nu-null-battery", ok,
                "all 20 nu vectors are isotropic, positive on delta, "
                "with half-vectors in the lattice")

    v = Fraction(1, 2) * lt.nu(4, 0) - 3 * lt.U(0, 1)
    round_trip = lt.LatticeVector.from_json(v.to_json()) == v
    suite.check("json-round-trip", round_trip, "exact string coordinates")
    return suite.report()


# --------------------------------------------------------------------------
# coxeter

def verify_coxeter() -> VerifyReport:
    suite = _Suite("coxeter")
    diagram = cx.build_diagram()
    singles_u = sum(1 for (i, j) in diagram.single_edges
                    if cx.NODES[i][0] == "U" and cx.NODES[j][0] == "U")
    singles_a = sum(1 for (i, j) in diagram.single_edges
                    if cx.NODES[i][0] == "alpha"
                    and cx.NODES[j][0] == "alpha")
    mixed = len(diagram.single_edges) - singles_u - singles_a
    suite.check("diagram-edge-census",
                singles_u == 15 and singles_a == 30 and mixed == 0
                and len(diagram.double_edges) == 10,
                f"U-side {singles_u}, alpha-side {singles_a}, "
                f"double {len(diagram.double_edges)}, mixed {mixed}")

    suite.check("parity-character-well-defined",
                cx.verify_parity_well_defined(),
                "no single edge joins the two node kinds")

    groups = cx.cusp_orbits()
    counts = {k: len(v) for k, v in groups.items()}
    expected = {"E~6+A~2": 20, "D~5+A~3": 15, "A~4+A~4": 12,
                "A~5+A~2+A~1": 10}
    suite.check("cusp-orbit-census", counts == expected,
                f"57 cusps in four orbit types: {counts}")

    ok = True
    for a in range(5):
        for b in range(5):
            if a == b:
                continue
            e6, a2 = cx.e6_class_nodes(a, b)
            n = lt.nu(a, b)
            ok = ok and lt.inner_product(n, n) == 0
            for node in e6 + a2:
                ok = ok and lt.inner_product(n, cx.node_vector(node)) == 0
    branched = len(groups.get("E~6+A~2", ()))
    suite.check("branched-cusp-null-vectors", ok and branched == 20,
                f"{branched} branched cusps; each nu is null and "
                "orthogonal to its node set")

    lhs = lt.alpha(0, 1) + lt.alpha(0, 2) + lt.alpha(0, 3)
    first = lhs == Fraction(1, 2) * lt.nu(4, 0)
    six = (lt.alpha(1, 4) + lt.alpha(2, 4)) \
        + (lt.alpha(2, 4) + lt.alpha(3, 4)) \
        + (lt.alpha(3, 4) + lt.alpha(1, 4))
    second = six == lt.nu(0, 4)
    suite.check("cusp-identities", first and second,
                "three-alpha sum is half nu(4,0); "
                "six-alpha sum equals nu(0,4)")

    names = {}
    for component, name in cx.affine_components():
        names[name] = names.get(name, 0) + 1
    expected_components = {"A~1": 10, "A~2": 30, "A~3": 15, "A~4": 24,
                           "A~5": 10, "D~5": 15, "E~6": 20}
    suite.check("affine-component-census", names == expected_components,
                f"{sum(names.values())} affine subdiagrams: {names}")
    return suite.report()


# --------------------------------------------------------------------------
# group

def verify_group(params: ag.FamilyParams = ag.DEFAULT_PARAMS
                 ) -> VerifyReport:
    suite = _Suite("group")

    ok, details = ag.check_homomorphism(4, params)
    suite.check("homomorphism-to-length-4", ok,
                f"{details['literal_pairs']} literal pairs plus "
                f"{details['free_concat_pairs']} structural concatenations")

    ok, total = ag.check_injectivity(6, params)
    suite.check("injectivity-to-length-6", ok and total == 34968,
                f"{total} reduced words give distinct matrices")

    distinct = ag.FamilyParams.of(1, 2, 3, 4, 5)
    suite.check("shimada-relations-distinct-weights",
                ag.verify_shimada_relations(distinct),
                "involution, braid-free and commuting relations "
                "for weights (1,2,3,4,5)")

    rng = random.Random(2026)
    d = lt.delta()
    ok = True
    for trial in range(1000):
        length = 1 + trial % 12
        word = ag.random_reduced_word(rng, length)
        moved = ag.word_to_isometry(word, params).apply(d)
        reduced, recovered = ag.reduce_to_chamber(moved, params)
        if reduced != d or not (recovered * word).is_identity():
            ok = False
            break
    suite.check("nef-scramble-inversion-1000", ok,
                "1000 seeded scrambles of delta reduced back exactly")

    examples = ag.is_nef(d, params) \
        and not ag.is_nef(lt.U(0, 1), params) \
        and not ag.is_nef(-1 * d, params) \
        and ag.is_nef(lt.ZERO, params) \
        and all(ag.is_nef(lt.f(a, b), params) for a, b in lt.PAIRS)
    suite.check("nef-examples", examples,
                "delta and all f_ab nef; U_01 and -delta not nef")

    got = ag.new_nodes(Fraction(1, 16))
    first = got == [tuple(map(Fraction, (1, 1, 1, 1, -4)))]
    quarter = ag.new_nodes(Fraction(1, 4))
    expected = set()
    for spot in range(4):
        ys = [1, 1, 1, 1]
        ys[spot] = -1
        expected.add(tuple(map(Fraction, ys + [-2])))
    second = set(quarter) == expected and len(quarter) == 4
    empty = ag.new_nodes(1) == [] and ag.new_nodes(2) == []
    suite.check("new-nodes", first and second and empty,
                "t=1/16 gives (1,1,1,1,-4); t=1/4 gives the four "
                "sign images of (1,1,1,-1,-2); t=1,2 give none")
    return suite.report()


# --------------------------------------------------------------------------
# quaternion

def verify_quaternion() -> VerifyReport:
    suite = _Suite("quaternion")

    three = (qt.I + qt.J + qt.K).norm() == 3
    observed = (qt.J - qt.K) * (qt.I - qt.J).inverse() \
        == qt.quat("-1/2", "1/2", "1/2", "1/2")
    suite.check("arithmetic-identities", three and observed,
                "norm(i+j+k) = 3; (j-k)(i-j)^-1 = (-1+i+j+k)/2")

    units = qt.binary_tetrahedral()
    closed = all(u * v in units for u in units for v in units)
    suite.check("unit-group-order-24", len(units) == 24 and closed,
                f"{len(units)} unit quaternions, closed under product")

    edges = [qt.conjugation_rotation(e) for e in qt.EDGE_QUATS]
    group = qt.closure(edges, cap=100)
    perms = {qt.diagonal_permutation(r) for r in group}
    suite.check("edge-closure-symmetric-group",
                len(group) == 24 and len(perms) == 24,
                f"closure of the six edge rotations has order {len(group)} "
                "acting faithfully on the diagonals")

    suite.check("sl2f3-bijection", qt.sl2f3_check(),
                "24 units map onto SL2(F3) injectively")

    suite.check("transposition-equivariance", qt.verify_equivariance(),
                "conjugation by transposition rotations relabels "
                "the ten involutions")

    facets = all(qt.facet_reflection(a).determinant() == -1
                 and qt.facet_reflection(a).is_orthogonal()
                 and qt.facet_reflection(a).compose(qt.facet_reflection(a))
                 == qt.Rotation3.identity()
                 for a in range(4))
    suite.check("facet-reflections", facets,
                "four orthogonal involutions of determinant -1")
    return suite.report()


# --------------------------------------------------------------------------
# tree

def verify_tree(radius: int = 4,
                precision: int = DEFAULT_PRECISION) -> VerifyReport:
    suite = _Suite("tree")

    root = sqrt_minus_two(precision)
    square_back = (root * root).same(Padic3.from_int(-2, precision))
    suite.check("sqrt-minus-two", root.residue(2) == 4 and square_back,
                f"branch {root.residue(2)} mod 9, squares back to -2 "
                f"at precision {precision}")

    det = tr.split_quaternion(qt.I + qt.J + qt.K, precision).det()
    si = tr.split_quaternion(qt.I, precision)
    sj = tr.split_quaternion(qt.J, precision)
    minus = tr.split_quaternion(-qt.ONE, precision)
    relations = all(x.same(y) for r1, r2 in
                    zip((si @ si).entries, minus.entries)
                    for x, y in zip(r1, r2)) \
        and all(x.same(y) for r1, r2 in
                zip((sj @ sj).entries, minus.entries)
                for x, y in zip(r1, r2))
    suite.check("splitting-relations",
                relations and (det.valuation, det.unit % 3) == (1, 1),
                "I^2 = J^2 = -1; det split(i+j+k) = 3")

    agreement = all(tr.split_quaternion(u, precision).mod3()
                    == qt.sl2f3_image(u) for u in qt.binary_tetrahedral())
    suite.check("mod3-reduction-agreement", agreement,
                "splitting reduces mod 3 to the SL2(F3) table on all units")

    sizes = [len(tr.ball(r, precision)) for r in range(radius + 1)]
    expected = [1]
    for _ in range(radius):
        expected.append(expected[-1] + 4 * 3 ** (len(expected) - 1))
    suite.check("ball-sizes", sizes == expected,
                f"ball sizes {sizes} for radius <= {radius}")

    report = tr.verify_simple_transitivity(min(radius, 4), precision)
    suite.check("simple-transitivity",
                report["bijection"] and report["distances_match"]
                and report["bipartition"],
                f"words biject onto the ball, counts {report['counts']}, "
                "length = distance, odd words swap classes")

    common = set(tr.ball(2, precision))
    for u in qt.binary_tetrahedral():
        common &= tr.fixed_vertices(tr.split_quaternion(u, precision), 2,
                                    precision)
    suite.check("unit-group-fixes-only-base", common == {tr.BASE},
                "the 24 units share exactly the base vertex in radius 2")

    ok = True
    order3 = [u for u in qt.binary_tetrahedral()
              if u.w != 0 and u.w.denominator == 2]
    for u in order3:
        fixed = tr.fixed_vertices(tr.split_quaternion(u, precision), 4,
                                  precision)
        others = fixed - {tr.BASE}
        if tr.BASE not in fixed or len(others) != 1 or \
                others.pop().distance_from_base() != 1:
            ok = False
    suite.check("order-three-fixed-pairs", ok and len(order3) == 16,
                f"{len(order3)} order-3 rotations each fix the base "
                "plus exactly one neighbor in radius 4")

    ok = True
    for d in qt.DIAGONALS:
        g = tr.split_quaternion(d, precision)
        if tr.fixed_vertices(g, 3, precision):
            ok = False
        for v in tr.ball(2, precision):
            if tr.act(g, v).vertex_class() == v.vertex_class():
                ok = False
    suite.check("diagonal-moves-swap-classes", ok,
                "each diagonal generator fixes no vertex in radius 3 "
                "and swaps the bipartition")

    order = tr.stabilizer_order(3, precision)
    single = all(tr.act(tr.split_quaternion(d, precision), tr.BASE)
                 != tr.BASE for d in qt.DIAGONALS)
    suite.check("base-stabilizer-order-24", order == 24 and single,
                f"stabilizer order {order}; no single letter fixes "
                "the base")

    suite.check("sl2z9-rigidity", tr.verify_distance2_rigidity(),
                "conjugation relation, order-3 reduction and "
                "transitivity on the 12 cyclic subgroups")
    return suite.report()


# --------------------------------------------------------------------------
# game

def verify_game() -> VerifyReport:
    suite = _Suite("game")

    ok = True
    for seed in range(500):
        length = 1 + seed % 20
        state = gm.scramble(length, seed)
        expected = [f"F{a}" for a in reversed(state.word.free)]
        moves = gm.solve(state)
        if moves != expected or len(moves) != length:
            ok = False
            break
        if not gm.apply_moves(state, moves).is_solved():
            ok = False
            break
    suite.check("scramble-solve-500", ok,
                "500 seeded scrambles solved by exactly the reversed word")

    ok, count = gm.check_pose_injectivity(5)
    suite.check("pose-table-collision-free", ok and count == 11640,
                f"{count} poses, one per reduced word of length <= 5")

    ok, count = gm.check_linear_injectivity(6)
    suite.check("linear-injectivity-to-length-6", ok and count == 34968,
                f"{count} reduced words give distinct linear parts")

    rng = random.Random(99)
    functorial = True
    for _ in range(100):
        state = gm.GameState.initial()
        for _ in range(rng.randint(0, 20)):
            if rng.random() < 0.7:
                state = gm.apply_move(state, rng.randrange(4))
            else:
                p = list(range(4))
                rng.shuffle(p)
                state = gm.apply_move(state, tuple(p))
        if state.pose != gm.word_pose(state.word):
            functorial = False
        if not gm.apply_moves(state, gm.solve(state)).is_solved():
            functorial = False
    suite.check("word-pose-functoriality", functorial,
                "pose equals the reduced word's pose on 100 random "
                "histories of length <= 20, and every solve returns")

    geometry = all(gm.facet_move(a).determinant() == -1
                   and gm.facet_move(a).compose(gm.facet_move(a))
                   == gm.IDENTITY_POSE for a in range(4))
    plane = gm.facet_move(0).apply((1, -1, -1)) == (1, -1, -1) \
        and gm.facet_move(0).apply((0, 0, -1)) == (0, 0, -1)
    suite.check("facet-reflection-geometry", geometry and plane,
                "facet moves are determinant -1 involutions fixing "
                "their plane pointwise")
    return suite.report()


# --------------------------------------------------------------------------
# cross-model

def verify_cross(params: ag.FamilyParams = ag.DEFAULT_PARAMS,
                 precision: int = DEFAULT_PRECISION) -> VerifyReport:
    suite = _Suite("cross")

    ok, total = ag.check_injectivity(5, params)
    suite.check("lattice-kernel-trivial", ok,
                f"{total} matrices distinct, so only the empty word "
                "acts trivially on the lattice")

    rotations: dict[tuple[int, ...], qt.Rotation3] = {
        (): qt.Rotation3.identity()}
    frontier = [()]
    for _ in range(5):
        nxt = []
        for w in frontier:
            for a in range(4):
                if w and w[-1] == a:
                    continue
                ext = w + (a,)
                rotations[ext] = rotations[w].compose(
                    qt.conjugation_rotation(qt.DIAGONALS[a]))
                nxt.append(ext)
        frontier = nxt
    perm_rot = {p: qt.conjugation_rotation(q)
                for p, q in qt.perm_quaternions().items()}
    identity_rot = qt.Rotation3.identity()
    rotation_trivial = [
        (w, p) for w in rotations for p in perm_rot
        if rotations[w].compose(perm_rot[p]) == identity_rot]
    suite.check("rotation-kernel-trivial",
                rotation_trivial == [((), (0, 1, 2, 3))],
                f"{len(rotations) * 24} words checked in the rotation "
                "model; only the empty word is trivial")

    probes = (tr.BASE,) + tr.neighbors(tr.BASE, precision)
    tree_trivial = []
    for w in rotations:
        for p in qt.perm_quaternions():
            g = tr.split_quaternion(qt.word_quaternion(w, p), precision)
            if tr.act(g, tr.BASE) != tr.BASE:
                continue
            if all(tr.act(g, v) == v for v in probes[1:]):
                tree_trivial.append((w, p))
    suite.check("tree-kernel-trivial",
                tree_trivial == [((), (0, 1, 2, 3))],
                "only the empty word fixes the base and all four "
                "neighbors of the tree")

    agree = (rotation_trivial == tree_trivial)
    suite.check("kernel-agreement-to-length-5", agree and ok,
                "triviality coincides across lattice, rotation and "
                "tree models for all 11640 words")
    return suite.report()


SUITES = {
    "lattice": lambda params, radius, precision: verify_lattice(),
    "coxeter": lambda params, radius, precision: verify_coxeter(),
    "group": lambda params, radius, precision: verify_group(params),
    "quaternion": lambda params, radius, precision: verify_quaternion(),
    "tree": lambda params, radius, precision: verify_tree(radius, precision),
    "game": lambda params, radius, precision: verify_game(),
    "cross": lambda params, radius, precision: verify_cross(params,
                                                            precision),
}

SUITE_ORDER = ("lattice", "coxeter", "group", "quaternion", "tree", "game",
               "cross")


def run_suites(names, params: ag.FamilyParams = ag.DEFAULT_PARAMS,
               radius: int = 4,
               precision: int = DEFAULT_PRECISION) -> list[VerifyReport]:
    return [SUITES[name](params, radius, precision) for name in names]
