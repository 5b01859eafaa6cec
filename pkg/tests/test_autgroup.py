"""Word algebra, lattice representation, chamber reduction, new nodes."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tetraflect import autgroup as G
from tetraflect import lattice as L

T16 = G.DEFAULT_PARAMS                       # (1,1,1,1,1/16)
DISTINCT = G.FamilyParams.of(1, 2, 3, 4, 5)


def w(free=(), perm=(0, 1, 2, 3)):
    return G.GroupWord(tuple(free), tuple(perm))


words_st = st.builds(
    lambda letters, perm: G.GroupWord(G._reduce_free(letters), perm),
    st.lists(st.integers(0, 3), max_size=8),
    st.sampled_from(G.ALL_PERMS),
)


class TestWordAlgebra:
    def test_multiply_cancels(self):
        assert w([0, 1]) * w([1]) == w([0])

    def test_conjugation_relabels(self):
        s = (1, 0, 2, 3)
        assert w(perm=s) * w([0]) * w(perm=s) == w([1])

    def test_inverse_of_free_word(self):
        assert w([0, 1, 2]).inverse() == w([2, 1, 0])

    def test_inverse_with_perm(self):
        u = w([0, 3], (1, 2, 0, 3))
        assert u * u.inverse() == G.GroupWord.identity()
        assert u.inverse() * u == G.GroupWord.identity()

    def test_normal_form_validation(self):
        with pytest.raises(ValueError):
            G.GroupWord((0, 0), (0, 1, 2, 3))
        with pytest.raises(ValueError):
            G.GroupWord((4,), (0, 1, 2, 3))
        with pytest.raises(ValueError):
            G.GroupWord((), (0, 0, 1, 2))

    def test_counts(self):
        assert len(G.free_words(6)) == 1457
        assert len(G.all_words(6)) == 34968

    def test_format_and_parse(self):
        u = w([0, 1], (1, 0, 3, 2))
        assert str(u) == "x0 x1 s=(1032)"
        assert G.parse_word("x0 x1 s=(1032)") == u
        assert G.parse_word("e") == G.GroupWord.identity()
        assert str(G.GroupWord.identity()) == "e"
        assert G.parse_word("x0 x0 x1") == w([1])  # parser reduces

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            G.parse_word("x4")
        with pytest.raises(ValueError):
            G.parse_word("s=(0123) x0")
        with pytest.raises(ValueError):
            G.parse_word("s=(012)")

    def test_json_round_trip(self):
        u = w([2, 0], (3, 2, 1, 0))
        assert G.GroupWord.from_json(u.to_json()) == u

    @given(words_st, words_st, words_st)
    @settings(max_examples=60)
    def test_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(words_st)
    @settings(max_examples=60)
    def test_inverse_law(self, a):
        assert a * a.inverse() == G.GroupWord.identity()


class TestRepresentation:
    def test_equal_weights_give_transposition(self):
        assert G.generator_matrix(0, 1, T16) == L.LatticeIsometry.from_permutation(
            [1, 0, 2, 3, 4]
        )

    def test_generators_are_involutive_isometries(self):
        for a, b in L.PAIRS:
            m = G.generator_matrix(a, b, DISTINCT)
            assert m.compose(m) == L.LatticeIsometry.identity()
            assert m.is_isometry()
            assert m.preserves_lattice()

    def test_generator_images(self):
        g04 = G.generator_matrix(0, 4, T16)
        assert g04.apply(L.U(0, 4)) == L.U(0, 4) + 2 * L.alpha(0, 4)
        assert g04.apply(L.U(0, 4)) == 2 * L.f(0, 4) - L.U(0, 4)
        g14 = G.generator_matrix(1, 4, T16)
        assert g14.apply(L.U(0, 4)) == L.U(0, 1)

    def test_scalar_mul_on_vectors(self):
        # 2 * alpha is integral even though alpha enters with halves
        assert all(x.denominator == 1
                   for x in (2 * L.alpha(0, 4)).coords)

    def test_word_to_isometry_basics(self):
        assert G.word_to_isometry(G.GroupWord.identity(), T16) == \
            L.LatticeIsometry.identity()
        assert G.word_to_isometry(w([2]), T16) == G.generator_matrix(2, 4, T16)
        assert G.word_to_isometry(w(perm=(1, 0, 2, 3)), T16) == \
            L.LatticeIsometry.from_permutation([1, 0, 2, 3, 4])

    def test_word_to_isometry_rejects_other_shapes(self):
        with pytest.raises(ValueError):
            G.word_to_isometry(w([0]), DISTINCT)

    @given(words_st, words_st)
    @settings(max_examples=20, deadline=None)
    def test_homomorphism_sampled(self, a, b):
        lhs = G.word_to_isometry(a * b, T16)
        rhs = G.word_to_isometry(a, T16).compose(G.word_to_isometry(b, T16))
        assert lhs == rhs

    def test_injectivity_to_length_three(self):
        ok, count = G.check_injectivity(3, T16)
        assert ok and count == 53 * 24

    def test_homomorphism_battery_small(self):
        ok, details = G.check_homomorphism(2, T16)
        assert ok
        assert details["literal_pairs"] == 49 * 576

    def test_entries_stay_small(self):
        _, _, mats = G._free_matrix_table(6, T16)
        assert int(abs(mats).max()) < 2 ** 40


class TestShimadaRelations:
    def test_all_distinct_weights_pass(self):
        assert G.verify_shimada_relations(DISTINCT)

    def test_requires_distinct_weights(self):
        with pytest.raises(ValueError):
            G.verify_shimada_relations(T16)


class TestChamberReduction:
    def test_delta_already_reduced(self):
        v, word = G.reduce_to_chamber(L.delta(), T16)
        assert v == L.delta()
        assert word.is_identity()

    def test_null_vector_already_reduced(self):
        v, word = G.reduce_to_chamber(L.nu(4, 0), T16)
        assert v == L.nu(4, 0)
        assert word.is_identity()

    def test_recovers_inverse_word(self):
        scramble = w([0, 1, 2])
        moved = G.word_to_isometry(scramble, T16).apply(L.delta())
        v, word = G.reduce_to_chamber(moved, T16)
        assert v == L.delta()
        assert word == scramble.inverse()

    def test_seeded_scrambles(self):
        rng = random.Random(11)
        for _ in range(100):
            scramble = G.random_reduced_word(rng, rng.randint(1, 12))
            moved = G.word_to_isometry(scramble, T16).apply(L.delta())
            v, word = G.reduce_to_chamber(moved, T16)
            assert v == L.delta()
            assert word == scramble.inverse()
            assert G.word_to_isometry(word, T16).apply(moved) == L.delta()

    def test_precondition_errors(self):
        with pytest.raises(ValueError):
            G.reduce_to_chamber(L.U(0, 1), T16)          # norm -2
        with pytest.raises(ValueError):
            G.reduce_to_chamber(-1 * L.delta(), T16)     # Delta-pairing -10
        with pytest.raises(ValueError):
            G.reduce_to_chamber(L.delta(), DISTINCT)     # family shape


class TestNef:
    def test_examples(self):
        assert G.is_nef(L.delta(), T16)
        assert not G.is_nef(L.U(0, 1), T16)
        assert not G.is_nef(-1 * L.delta(), T16)
        assert G.is_nef(L.ZERO, T16)
        for a, b in L.PAIRS:
            assert G.is_nef(L.f(a, b), T16)

    def test_scrambled_delta_is_nef(self):
        moved = G.word_to_isometry(w([3, 0, 1]), T16).apply(L.delta())
        assert G.is_nef(moved, T16)

    def test_wall_counts(self):
        assert len(G.interior_roots(T16)) == 4
        assert len(G.exterior_roots(T16)) == 16


class TestNewNodes:
    def test_sixteenth(self):
        assert G.new_nodes(Fraction(1, 16)) == [
            tuple(Fraction(x) for x in (1, 1, 1, 1, -4))
        ]

    def test_quarter(self):
        got = G.new_nodes(Fraction(1, 4))
        expect = set()
        for spot in range(4):
            signs = [1, 1, 1, 1]
            signs[spot] = -1
            expect.add(tuple(Fraction(x) for x in signs + [-2]))
        assert set(got) == expect and len(got) == 4

    def test_no_solutions(self):
        assert G.new_nodes(2) == []
        assert G.new_nodes(1) == []

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            G.new_nodes(0)
