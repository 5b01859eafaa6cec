"""Lattice arithmetic: pairing tables, distinguished vectors, integral basis."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tetraflect import lattice as L


def _case_pairing(kind1: str, p: tuple[int, int], kind2: str, q: tuple[int, int]) -> int:
    """Independent oracle: the closed-form case tables for U/alpha pairings."""
    shared = len(set(p) & set(q))
    if kind1 == "U" and kind2 == "U":
        return -2 if p == q else (1 if shared == 0 else 0)
    if kind1 == "alpha" and kind2 == "alpha":
        return -2 if p == q else (1 if shared == 1 else 0)
    # mixed U/alpha
    return 2 if p == q else 0


def test_gram_table_all_400_entries():
    vectors = [("U", p, L.U(*p)) for p in L.PAIRS]
    vectors += [("alpha", p, L.alpha(*p)) for p in L.PAIRS]
    checked = 0
    for kind1, p, v in vectors:
        for kind2, q, w in vectors:
            assert L.inner_product(v, w) == _case_pairing(kind1, p, kind2, q), (
                kind1, p, kind2, q)
            checked += 1
    assert checked == 400


def test_norms_of_distinguished_vectors():
    for a, b in L.PAIRS:
        assert L.inner_product(L.U(a, b), L.U(a, b)) == -2
        assert L.inner_product(L.alpha(a, b), L.alpha(a, b)) == -2
        assert L.inner_product(L.f(a, b), L.f(a, b)) == 0
    for a in range(5):
        for b in range(5):
            if a != b:
                assert L.inner_product(L.nu(a, b), L.nu(a, b)) == 0


def test_alpha_is_f_minus_U():
    for a, b in L.PAIRS:
        assert L.alpha(a, b) == L.f(a, b) - L.U(a, b)


def test_delta_battery():
    d = L.delta()
    assert L.inner_product(d, d) == 10
    for a, b in L.PAIRS:
        assert L.inner_product(d, L.U(a, b)) == 1
        assert L.inner_product(d, L.alpha(a, b)) == 2
        assert L.inner_product(d, L.f(a, b)) == 3


def test_specific_pairings():
    assert L.inner_product(L.alpha(0, 1), L.U(0, 1)) == 2
    assert L.inner_product(L.f(0, 1), L.delta()) == 3
    assert L.inner_product(L.f(0, 1), L.f(2, 3)) == 1


def test_nu_coordinates():
    assert L.nu(4, 0).to_json() == ["0", "0", "0", "3", "2", "2", "1", "2", "1", "1"]
    assert L.nu(0, 4).to_json() == ["1", "1", "1", "3", "2", "2", "0", "2", "0", "0"]
    assert L.nu(4, 0) != L.nu(0, 4)


def test_cusp_identity_half_nu():
    lhs = L.alpha(0, 1) + L.alpha(0, 2) + L.alpha(0, 3)
    assert lhs == Fraction(1, 2) * L.nu(4, 0)


def _g(a: int, b: int, v: L.LatticeVector) -> L.LatticeVector:
    """Transposition (a b) of subscripts composed with reflection in alpha_ab."""
    w = L.reflect_in_root(L.alpha(a, b), v)
    perm = list(range(5))
    perm[a], perm[b] = perm[b], perm[a]
    return L.LatticeIsometry.from_permutation(perm).apply(w)


def test_cusp_identity_six_alpha_sum():
    # The three reflected-and-permuted images of the exterior triangle roots,
    # six alpha terms in total, add up to the full null vector.
    img1 = _g(4, 1, L.alpha(1, 2))
    img2 = _g(4, 2, L.alpha(2, 3))
    img3 = _g(4, 3, L.alpha(3, 1))
    assert img1 == L.alpha(1, 4) + L.alpha(2, 4)
    assert img2 == L.alpha(2, 4) + L.alpha(3, 4)
    assert img3 == L.alpha(3, 4) + L.alpha(1, 4)
    assert img1 + img2 + img3 == L.nu(0, 4)
    # equivalently: the half-sum pattern at the doubled cusp
    half = L.alpha(1, 4) + L.alpha(2, 4) + L.alpha(3, 4)
    assert 2 * half == L.nu(0, 4)


def test_exchange_of_null_vectors():
    # regression for the computed action: the (1 4) generator swaps these cusps
    assert _g(4, 1, L.nu(0, 1)) == L.nu(0, 4)
    assert _g(4, 1, L.nu(0, 4)) == L.nu(0, 1)


def test_reflection_examples():
    a01 = L.alpha(0, 1)
    assert L.reflect_in_root(a01, a01) == -a01
    assert L.reflect_in_root(a01, L.U(2, 3)) == L.U(2, 3)
    assert L.reflect_in_root(a01, L.delta()) == L.delta() + 2 * a01


def test_reflection_rejects_non_root():
    with pytest.raises(ValueError):
        L.reflect_in_root(L.f(0, 1), L.delta())
    with pytest.raises(ValueError):
        L.reflect_in_root(L.delta(), L.U(0, 1))


def test_integral_basis_even_unimodular_signature():
    basis = L.integral_basis()
    assert len(basis) == 10
    gram = L.gram_matrix(basis)
    for i in range(10):
        assert gram[i][i] % 2 == 0
        for j in range(10):
            assert gram[i][j].denominator == 1
    assert L.determinant(gram) == -1
    assert L.signature(gram) == (1, 9, 0)


def test_lattice_membership():
    for a, b in L.PAIRS:
        assert L.in_lattice(L.U(a, b))
        assert L.in_lattice(L.f(a, b))
        assert L.in_lattice(L.alpha(a, b))
    assert L.in_lattice(Fraction(1, 2) * L.nu(4, 0))
    assert not L.in_lattice(Fraction(1, 2) * L.U(0, 1))
    assert not L.in_lattice(Fraction(1, 2) * L.delta())


def test_signature_edge_cases():
    assert L.signature([[0, 0], [0, 0]]) == (0, 0, 2)
    assert L.signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert L.signature(L.GRAM) == (1, 9, 0)
    # six roots spanning a spherical diagram plus the matching null vector:
    # the Gram matrix must report a zero eigenvalue
    roots = [L.U(0, 4), L.U(1, 2), L.U(2, 3), L.U(1, 3), L.U(1, 4), L.U(2, 4)]
    gram = L.gram_matrix(roots + [L.nu(4, 0)])
    pos, neg, zero = L.signature(gram)
    assert zero >= 1
    assert (pos, neg, zero) == (0, 6, 1)


def test_permutation_isometries():
    iso = L.LatticeIsometry.from_permutation([1, 0, 2, 3, 4])
    assert iso.is_isometry()
    assert iso.preserves_lattice()
    assert iso.apply(L.U(0, 2)) == L.U(1, 2)
    assert iso.apply(L.alpha(0, 1)) == L.alpha(0, 1)
    assert iso.compose(iso) == L.LatticeIsometry.identity()
    with pytest.raises(ValueError):
        L.LatticeIsometry.from_permutation([0, 0, 1, 2, 3])


def test_json_round_trip():
    v = Fraction(1, 2) * L.nu(4, 0) - 3 * L.U(0, 1)
    payload = v.to_json()
    assert all(isinstance(s, str) for s in payload)
    assert L.LatticeVector.from_json(payload) == v
    iso = L.LatticeIsometry.from_permutation([4, 1, 2, 3, 0])
    assert L.LatticeIsometry.from_json(iso.to_json()) == iso
    with pytest.raises(TypeError):
        L.LatticeVector.from_json([0.5] * 10)  # type: ignore[list-item]


def test_generator_dispatch():
    assert L.generator("U", 0, 1) == L.U(0, 1)
    assert L.generator("alpha", 3, 4) == L.alpha(3, 4)
    assert L.generator("f", 2, 0) == L.f(0, 2)
    assert L.generator("nu", 4, 0) == L.nu(4, 0)
    assert L.generator("delta") == L.delta()
    with pytest.raises(ValueError):
        L.generator("delta", 0, 1)
    with pytest.raises(ValueError):
        L.generator("beta", 0, 1)
    with pytest.raises(ValueError):
        L.generator("U", 2, 2)


_small_rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6)
_vectors = st.lists(_small_rationals, min_size=10, max_size=10).map(
    lambda xs: L.LatticeVector(tuple(Fraction(x) for x in xs)))
_roots = st.sampled_from(
    [L.U(a, b) for a, b in L.PAIRS] + [L.alpha(a, b) for a, b in L.PAIRS])


@settings(max_examples=60, deadline=None)
@given(_vectors, _vectors, _vectors, _small_rationals)
def test_inner_product_bilinear_symmetric(v, w, x, c):
    c = Fraction(c)
    assert L.inner_product(v, w) == L.inner_product(w, v)
    assert L.inner_product(v + w, x) == L.inner_product(v, x) + L.inner_product(w, x)
    assert L.inner_product(c * v, w) == c * L.inner_product(v, w)


@settings(max_examples=60, deadline=None)
@given(_roots, _vectors, _vectors)
def test_reflection_involution_and_isometry(r, v, w):
    assert L.reflect_in_root(r, L.reflect_in_root(r, v)) == v
    assert L.inner_product(
        L.reflect_in_root(r, v), L.reflect_in_root(r, w)
    ) == L.inner_product(v, w)
