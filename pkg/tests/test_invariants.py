import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidpos.braids import BraidWord, free_reduce, torus_braid
from braidpos.errors import NotAKnotError
from braidpos.invariants import (
    SeifertMatrix,
    alexander_burau,
    alexander_seifert,
    burau_reduced,
    determinant,
    fox_milnor_necessary,
    fox_milnor_twist_family,
    normalize_alexander,
    seifert_matrix,
    signature,
    twist_double_alexander,
)
from braidpos.laurent import LaurentPoly
from braidpos.sampling import random_knot_word

TREFOIL = BraidWord(2, (1, 1, 1))
FIGURE8 = BraidWord(3, (1, -2, 1, -2))
UNKNOT = BraidWord(1)

TREFOIL_DELTA = LaurentPoly({1: 1, 0: -1, -1: 1})
FIGURE8_DELTA = LaurentPoly({1: -1, 0: 3, -1: -1})


class TestBurauRoute:
    def test_unknot(self):
        assert alexander_burau(UNKNOT) == LaurentPoly.one()

    def test_trefoil(self):
        assert alexander_burau(TREFOIL) == TREFOIL_DELTA

    def test_figure_eight_matches_twist_formula(self):
        assert alexander_burau(FIGURE8) == FIGURE8_DELTA
        assert FIGURE8_DELTA == twist_double_alexander(1)

    def test_link_rejected(self):
        with pytest.raises(NotAKnotError):
            alexander_burau(BraidWord(2, (1, 1)))

    def test_braid_relations(self):
        def matrices_equal(a, b):
            return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))

        for strands in (3, 4, 5):
            for i in range(1, strands - 1):
                braid_rel_left = BraidWord(strands, (i, i + 1, i))
                braid_rel_right = BraidWord(strands, (i + 1, i, i + 1))
                assert matrices_equal(
                    burau_reduced(braid_rel_left), burau_reduced(braid_rel_right)
                )
            for i in range(1, strands - 1):
                for j in range(i + 2, strands):
                    far_left = BraidWord(strands, (i, j))
                    far_right = BraidWord(strands, (j, i))
                    assert matrices_equal(burau_reduced(far_left), burau_reduced(far_right))
            inverse_pair = BraidWord(strands, (1, -1))
            assert matrices_equal(burau_reduced(inverse_pair), burau_reduced(BraidWord(strands)))


class TestSeifertRoute:
    def test_trefoil_matrix(self):
        v = seifert_matrix(TREFOIL)
        assert v.size == 2
        assert signature(v) == -2
        skew = [[v.rows[i][j] - v.rows[j][i] for j in range(2)] for i in range(2)]
        assert skew[0][1] * skew[1][0] == -1

    def test_unknot_matrix_is_empty(self):
        assert seifert_matrix(UNKNOT).size == 0
        assert alexander_seifert(seifert_matrix(UNKNOT)) == LaurentPoly.one()

    def test_hopf_link_rejected(self):
        with pytest.raises(NotAKnotError):
            seifert_matrix(BraidWord(2, (1, 1)))

    def test_trefoil_polynomial_by_hand(self):
        v = SeifertMatrix(((-1, 1), (0, -1)))
        assert alexander_seifert(v) == TREFOIL_DELTA

    def test_figure_eight(self):
        v = seifert_matrix(FIGURE8)
        assert alexander_seifert(v) == FIGURE8_DELTA
        assert signature(v) == 0

    def test_size_counts_reduced_letters(self):
        word = BraidWord(2, (1, -1, 1, 1, 1))
        assert seifert_matrix(word).size == 2


class TestSignature:
    def test_anchors(self):
        assert signature(seifert_matrix(TREFOIL)) == -2
        assert signature(seifert_matrix(UNKNOT)) == 0
        assert signature(seifert_matrix(FIGURE8)) == 0

    def test_torus_2_5(self):
        assert signature(seifert_matrix(torus_braid(2, 5))) == -4

    def test_against_numpy_eigenvalues(self):
        rng = random.Random(5)
        for _ in range(60):
            word = random_knot_word(rng, max_strands=5, max_length=10)
            symmetric = np.array(seifert_matrix(word).symmetrized(), dtype=float)
            if symmetric.size == 0:
                expected = 0
            else:
                eigenvalues = np.linalg.eigvalsh(symmetric)
                assert all(abs(e) > 1e-9 for e in eigenvalues)  # knots: nonsingular
                expected = int((eigenvalues > 0).sum() - (eigenvalues < 0).sum())
            assert signature(seifert_matrix(word)) == expected

    def test_mirror_antisymmetry(self):
        rng = random.Random(6)
        for _ in range(40):
            word = random_knot_word(rng, max_strands=5, max_length=10)
            assert signature(seifert_matrix(word.mirror())) == -signature(seifert_matrix(word))


class TestOracleEquivalence:
    def test_random_words(self):
        rng = random.Random(7)
        for _ in range(120):
            word = random_knot_word(rng)
            delta = alexander_burau(word)
            assert delta == alexander_seifert(seifert_matrix(word))
            assert delta.is_symmetric()
            assert delta.evaluate_unit(1) == 1
            assert abs(delta.evaluate_unit(-1)) % 2 == 1

    @given(st.integers(2, 9).map(lambda q: q | 1))
    @settings(max_examples=10, deadline=None)
    def test_two_strand_torus_closed_form(self, q):
        # Delta(T(2,q)) alternates: T^k - T^(k-1) + ... for q = 2k + 1.
        delta = alexander_burau(torus_braid(2, q))
        k = (q - 1) // 2
        expected = LaurentPoly({e: (-1) ** (k - e) for e in range(-k, k + 1)})
        assert delta == expected


class TestNormalization:
    def test_unit_shift_and_sign(self):
        raw = LaurentPoly({5: -1, 4: 1, 3: -1})  # -T^2 Delta(trefoil) shifted
        assert normalize_alexander(raw) == TREFOIL_DELTA

    def test_rejects_zero(self):
        from braidpos.errors import InternalConsistencyError

        with pytest.raises(InternalConsistencyError):
            normalize_alexander(LaurentPoly.zero())


class TestDeterminantAndFoxMilnor:
    def test_unknot(self):
        assert determinant(UNKNOT) == 1

    def test_trefoil(self):
        assert determinant(TREFOIL) == 3

    def test_twist_double_values(self):
        assert abs(twist_double_alexander(2).evaluate_unit(-1)) == 9
        assert twist_double_alexander(0) == LaurentPoly.one()

    def test_necessary_condition(self):
        assert fox_milnor_necessary(LaurentPoly.one())
        assert not fox_milnor_necessary(twist_double_alexander(1))  # det 5
        assert fox_milnor_necessary(twist_double_alexander(2))  # det 9

    @pytest.mark.parametrize(
        "n,expected",
        [(0, True), (1, False), (2, True), (3, False), (4, False), (5, False),
         (6, True), (12, True), (-1, False)],
    )
    def test_twist_family(self, n, expected):
        assert fox_milnor_twist_family(n) is expected

    def test_twist_family_matches_necessary_test(self):
        for n in range(0, 1001):
            assert fox_milnor_twist_family(n) == fox_milnor_necessary(
                twist_double_alexander(n)
            )

    def test_determinant_odd_on_random_knots(self):
        rng = random.Random(8)
        for _ in range(40):
            assert determinant(random_knot_word(rng, max_strands=5, max_length=10)) % 2 == 1


class TestFreeReductionStability:
    def test_alexander_unchanged_by_reduction(self):
        rng = random.Random(9)
        for _ in range(30):
            word = random_knot_word(rng, max_strands=4, max_length=8)
            padded = BraidWord(word.strands, word.letters + (1, -1))
            assert free_reduce(padded) == free_reduce(word)
            assert alexander_burau(padded) == alexander_burau(word)
