"""Diagram structure, polytope membership, parity, cusp classification."""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import permutations

import pytest

from tetraflect import coxeter as C
from tetraflect import lattice as L


def _nodes_of_kind(kind: str) -> list[int]:
    return [i for i, n in enumerate(C.NODES) if n[0] == kind]


def test_diagram_edge_counts():
    diagram = C.build_diagram()
    u_nodes = set(_nodes_of_kind("U"))
    a_nodes = set(_nodes_of_kind("alpha"))
    u_edges = [e for e in diagram.single_edges if e <= u_nodes]
    a_edges = [e for e in diagram.single_edges if e <= a_nodes]
    mixed = [e for e in diagram.single_edges
             if not e <= u_nodes and not e <= a_nodes]
    assert len(u_edges) == 15          # Petersen
    assert len(a_edges) == 30          # complement of Petersen
    assert mixed == []                 # no single edges across kinds
    assert len(diagram.double_edges) == 10
    for e in diagram.double_edges:
        i, j = tuple(e)
        assert {C.NODES[i][0], C.NODES[j][0]} == {"U", "alpha"}
        assert C.NODES[i][1] == C.NODES[j][1]


def test_petersen_side_is_petersen():
    diagram = C.build_diagram()
    u_nodes = _nodes_of_kind("U")
    adj = {i: [j for j in u_nodes
               if i != j and frozenset((i, j)) in diagram.single_edges]
           for i in u_nodes}
    assert all(len(v) == 3 for v in adj.values())
    # girth 5: no triangles or squares through any vertex
    for start in u_nodes:
        level = {start: 0}
        frontier = [start]
        parent = {start: None}
        girth = None
        for _ in range(3):
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if w == parent[v]:
                        continue
                    if w in level:
                        girth = level[v] + level[w] + 1
                        break
                    level[w] = level[v] + 1
                    parent[w] = v
                    nxt.append(w)
                if girth:
                    break
            if girth:
                break
            frontier = nxt
        assert girth is None or girth >= 5
    # vertex-transitive under index permutations
    for target in u_nodes[1:]:
        assert any(
            C.permute_node(perm, C.NODES[u_nodes[0]]) == C.NODES[target]
            for perm in permutations(range(5))
        )


def test_edge_multiplicity_examples():
    assert C.edge_multiplicity(("U", (0, 1)), ("U", (2, 3))) == 1
    assert C.edge_multiplicity(("U", (0, 1)), ("U", (0, 2))) == 0
    assert C.edge_multiplicity(("U", (0, 1)), ("alpha", (0, 1))) == 2
    assert C.edge_multiplicity(("alpha", (0, 1)), ("alpha", (1, 2))) == 1
    assert C.edge_multiplicity(("alpha", (0, 1)), ("alpha", (2, 3))) == 0
    assert C.edge_multiplicity(("U", (0, 1)), ("alpha", (0, 2))) == 0


def test_polytope_membership():
    assert C.in_polytope(L.delta())
    assert not C.in_polytope(-1 * L.delta())
    assert C.in_polytope(L.nu(4, 0))
    assert C.in_polytope(L.f(0, 1))
    assert not C.in_polytope(L.U(0, 1))
    assert C.in_polytope(L.ZERO)


def test_wall_pairings_keys():
    pairings = C.wall_pairings(L.delta())
    assert len(pairings) == 20
    assert pairings["U01"] == 1
    assert pairings["alpha01"] == 2


def test_parity_character():
    assert C.parity_character([("U", (0, 1)), ("alpha", (0, 1))]) == (1, 1)
    assert C.parity_character([], perm=[1, 0, 2, 3, 4]) == (0, 0)
    assert C.parity_character(["U01", "U23", "alpha34"]) == (0, 1)
    assert C.parity_character(["U01", "U01"]) == (0, 0)
    with pytest.raises(ValueError):
        C.parity_character(["Q01"])
    with pytest.raises(ValueError):
        C.parity_character([], perm=[0, 0, 1, 2, 3])


def test_parity_well_defined_and_doctored_counterexample():
    assert C.verify_parity_well_defined()
    u01 = C.NODE_INDEX[("U", (0, 1))]
    a02 = C.NODE_INDEX[("alpha", (0, 2))]
    doctored = C.build_diagram().single_edges | {frozenset((u01, a02))}
    assert not C.verify_parity_well_defined(doctored)


def test_affine_component_census():
    counts = Counter(name for _, name in C.affine_components())
    assert counts == {
        "A~1": 10,   # one per double edge
        "A~2": 30,   # triangles in the alpha side
        "A~3": 15,   # squares in the alpha side
        "A~4": 24,   # pentagons, both sides
        "A~5": 10,   # hexagons in the Petersen side
        "D~5": 15,
        "E~6": 20,
    }


def test_cusp_classification_orbit_types():
    cusps = C.classify_cusps()
    counts = Counter(c.orbit_type for c in cusps)
    assert counts == {
        "E~6+A~2": 20,
        "D~5+A~3": 15,
        "A~4+A~4": 12,
        "A~5+A~2+A~1": 10,
    }
    assert set(counts) == {"A~5+A~2+A~1", "E~6+A~2", "D~5+A~3", "A~4+A~4"}


def test_cusps_are_rank8_negative_semidefinite():
    for cusp in C.classify_cusps():
        gram = L.gram_matrix([C.node_vector(n) for n in cusp.nodes])
        pos, neg, zero = L.signature(gram)
        assert (pos, neg) == (0, 8)
        assert zero == len(cusp.nodes) - 8
        assert zero == len(cusp.components)


def test_cusp_null_vectors():
    for cusp in C.classify_cusps():
        nv = cusp.null_vector
        assert L.inner_product(nv, nv) == 0
        assert L.in_lattice(nv)
        assert all(
            L.inner_product(nv, C.node_vector(n)) == 0 for n in cusp.nodes
        )
        assert L.inner_product(nv, L.delta()) > 0
        # primitive: halving leaves the lattice
        assert not L.in_lattice(Fraction(1, 2) * nv)


def test_each_type_is_single_permutation_orbit():
    seen: dict[str, set] = {}
    for cusp in C.classify_cusps():
        seen.setdefault(cusp.orbit_type, set()).add(C.orbit_key(cusp.nodes))
    assert all(len(keys) == 1 for keys in seen.values())


def test_primary_component_lies_in_petersen_side():
    # the named first component of every cusp consists of U-nodes only
    for cusp in C.classify_cusps():
        first = cusp.components[0]
        assert all(kind == "U" for kind, _ in first)


def test_twenty_branched_cusps_match_ordered_pairs():
    cusps = {frozenset(c.nodes): c for c in C.classify_cusps()
             if c.orbit_type == "E~6+A~2"}
    assert len(cusps) == 20
    for a in range(5):
        for b in range(5):
            if a == b:
                continue
            e6, a2 = C.e6_class_nodes(a, b)
            key = frozenset(e6) | frozenset(a2)
            assert key in cusps, (a, b)
            cusp = cusps[key]
            # branch component in the U side, triangle in the alpha side
            assert set(cusp.components[0]) == set(e6)
            assert set(cusp.components[1]) == set(a2)
            # null vector is the primitive representative of nu_(a,b)
            assert cusp.null_vector == Fraction(1, 2) * L.nu(a, b)
            # nu itself is orthogonal to every node of the class
            nu = L.nu(a, b)
            assert all(
                L.inner_product(nu, C.node_vector(n)) == 0
                for n in cusp.nodes
            )


def test_branched_cusp_node_structure_for_4_0():
    e6, a2 = C.e6_class_nodes(4, 0)
    assert e6[0] == ("U", (0, 4))                                 # branch
    assert set(e6[1:4]) == {("U", (1, 2)), ("U", (2, 3)), ("U", (1, 3))}
    assert set(e6[4:]) == {("U", (1, 4)), ("U", (2, 4)), ("U", (3, 4))}
    assert set(a2) == {("alpha", (0, 1)), ("alpha", (0, 2)), ("alpha", (0, 3))}


def test_cusps_are_maximal():
    node_sets = [frozenset(c.nodes) for c in C.classify_cusps()]
    for s in node_sets:
        assert not any(s < t for t in node_sets)


def test_cusp_json_shape():
    payload = C.classify_cusps()[0].to_json()
    assert set(payload) == {"orbit_type", "component_types", "node_labels",
                            "null_vector"}
    assert all(isinstance(x, str) for x in payload["node_labels"])
    assert len(payload["null_vector"]) == 10
