import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidpos.braids import (
    BandFactorization,
    BandGenerator,
    BraidWord,
    QPFactorization,
    band_form_of_positive_word,
    closure_stats,
    expand_band,
    expand_qp,
    expand_sqp,
    free_reduce,
    iterated_torus_braid,
    qp_form_of_bands,
    sqp_surface_stats,
    torus_braid,
    torus_knot_genus,
)
from braidpos.errors import DomainError, NotAKnotError

# Worked examples used across the suite.  The four-band word on five strands
# with bands (2,5),(1,5),(2,4),(1,2) closes to a THREE component link: the
# band transpositions never touch disk 3 and contain the cycle 1-5-2-1.  The
# variant ending in (1,3) is a spanning tree of the five disks, so its
# closure is the genus-0 knot that the four-band picture is meant to bound.
FOUR_BAND_LINK = BandFactorization(5, ((2, 5), (1, 5), (2, 4), (1, 2)))
FOUR_BAND_KNOT = BandFactorization(5, ((2, 5), (1, 5), (2, 4), (1, 3)))


@st.composite
def braid_words(draw, max_strands=8, max_length=40):
    strands = draw(st.integers(2, max_strands))
    letters = draw(
        st.lists(
            st.tuples(st.integers(1, strands - 1), st.sampled_from((1, -1))),
            max_size=max_length,
        )
    )
    return BraidWord(strands, tuple(k * s for k, s in letters))


class TestBraidWord:
    def test_validation(self):
        with pytest.raises(DomainError):
            BraidWord(0)
        with pytest.raises(DomainError):
            BraidWord(2, (2,))
        with pytest.raises(DomainError):
            BraidWord(3, (0,))
        assert BraidWord(1).letters == ()
        assert BraidWord(4, [1, -3]).letters == (1, -3)

    def test_inverse_and_mirror(self):
        w = BraidWord(3, (1, -2, 2, 1))
        assert w.inverse().letters == (-1, -2, 2, -1)
        assert w.mirror().letters == (-1, 2, -2, -1)
        assert w.exponent_sum == 2


class TestExpandBand:
    def test_adjacent_band_is_single_generator(self):
        for i in range(1, 4):
            assert expand_band((i, i + 1), 5).letters == (i,)

    def test_small_band(self):
        assert expand_band((1, 3), 3).letters == (1, 2, -1)

    def test_wide_band(self):
        word = expand_band((2, 5), 5)
        assert word.letters == (2, 3, 4, -3, -2)
        assert len(word) == 2 * (5 - 2) - 1
        assert word.exponent_sum == 1

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            expand_band((2, 5), 4)
        with pytest.raises(DomainError):
            BandGenerator(3, 3)

    @given(st.integers(1, 6), st.integers(2, 7))
    def test_length_and_exponent_sum(self, i, j):
        if i >= j:
            i, j = j, i + 1
        word = expand_band((i, j), j)
        assert len(word) == 2 * (j - i) - 1
        assert word.exponent_sum == 1


class TestExpandSqp:
    def test_empty(self):
        assert expand_sqp(BandFactorization(1)).letters == ()

    def test_four_band_word(self):
        word = expand_sqp(FOUR_BAND_LINK)
        assert word.exponent_sum == 4
        assert len(word) == 5 + 7 + 3 + 1

    def test_trefoil_bands(self):
        f = BandFactorization(2, ((1, 2), (1, 2), (1, 2)))
        assert expand_sqp(f).letters == (1, 1, 1)

    def test_exponent_sum_is_band_count(self):
        assert expand_sqp(FOUR_BAND_KNOT).exponent_sum == 4


class TestExpandQp:
    def test_trivial_conjugate(self):
        f = QPFactorization(2, ((BraidWord(2), 1),))
        assert expand_qp(f).letters == (1,)

    def test_band_shaped_factors_match_sqp(self):
        qp = qp_form_of_bands(FOUR_BAND_KNOT)
        assert expand_qp(qp) == expand_sqp(FOUR_BAND_KNOT)

    def test_concatenation_before_reduction(self):
        f = QPFactorization(3, ((BraidWord(3, (2,)), 1), (BraidWord(3), 2)))
        word = expand_qp(f)
        assert word.letters == (2, 1, -2, 2)
        assert free_reduce(word).letters == (2, 1)

    def test_conjugator_out_of_range(self):
        with pytest.raises(DomainError):
            QPFactorization(3, ((BraidWord(2, (1,)), 1),))
        with pytest.raises(DomainError):
            QPFactorization(3, ((BraidWord(3), 3),))


class TestFreeReduce:
    def test_cancelling_pair(self):
        assert free_reduce(BraidWord(2, (1, -1))).letters == ()

    def test_single_cancellation(self):
        assert free_reduce(BraidWord(3, (2, 1, -2, 2))).letters == (2, 1)

    def test_cascading(self):
        assert free_reduce(BraidWord(3, (1, 2, -2, -1, 2))).letters == (2,)

    @given(braid_words())
    def test_idempotent(self, word):
        once = free_reduce(word)
        assert free_reduce(once) == once

    @given(braid_words())
    @settings(max_examples=150)
    def test_preserves_closure_invariants(self, word):
        before = closure_stats(word)
        after = closure_stats(free_reduce(word))
        assert before.permutation == after.permutation
        assert before.writhe == after.writhe


class TestClosureStats:
    def test_identity_braid(self):
        stats = closure_stats(BraidWord(3))
        assert stats.component_count == 3
        assert stats.writhe == 0

    def test_trefoil(self):
        stats = closure_stats(BraidWord(2, (1, 1, 1)))
        assert stats.component_count == 1
        assert stats.writhe == 3

    def test_four_band_closures(self):
        assert closure_stats(expand_sqp(FOUR_BAND_LINK)).component_count == 3
        assert closure_stats(expand_sqp(FOUR_BAND_KNOT)).component_count == 1

    def test_band_permutation_is_transposition(self):
        stats = closure_stats(expand_band((2, 5), 5))
        assert stats.permutation == (0, 4, 2, 3, 1)


class TestSurfaceStats:
    def test_trefoil_surface(self):
        stats = sqp_surface_stats(BandFactorization(2, ((1, 2),) * 3))
        assert (stats.strands, stats.band_count, stats.genus) == (2, 3, 1)
        assert stats.euler_characteristic == -1

    def test_four_band_knot_is_genus_zero(self):
        stats = sqp_surface_stats(FOUR_BAND_KNOT)
        assert (stats.strands, stats.band_count, stats.genus) == (5, 4, 0)
        assert stats.euler_characteristic == 1

    def test_single_band_unknot(self):
        stats = sqp_surface_stats(BandFactorization(2, ((1, 2),)))
        assert (stats.strands, stats.band_count, stats.genus) == (2, 1, 0)

    def test_link_closure_rejected(self):
        with pytest.raises(NotAKnotError, match="knot closure"):
            sqp_surface_stats(FOUR_BAND_LINK)

    @given(st.data())
    @settings(max_examples=100)
    def test_knot_surfaces_have_even_defect(self, data):
        strands = data.draw(st.integers(2, 5))
        count = data.draw(st.integers(strands - 1, 9))
        bands = []
        for _ in range(count):
            i = data.draw(st.integers(1, strands - 1))
            j = data.draw(st.integers(i + 1, strands))
            bands.append((i, j))
        f = BandFactorization(strands, tuple(bands))
        word = expand_sqp(f)
        assert word.exponent_sum == count
        if closure_stats(word).component_count == 1:
            stats = sqp_surface_stats(f)
            assert stats.genus >= 0
            assert stats.euler_characteristic == strands - count


class TestTorusBraid:
    def test_trefoil_presentation(self):
        assert torus_braid(2, 3).letters == (1, 1, 1)

    def test_knot_when_coprime(self):
        word = torus_braid(3, 4)
        assert word.letters == (1, 2) * 4
        assert closure_stats(word).component_count == 1

    def test_link_when_not_coprime(self):
        assert closure_stats(torus_braid(2, 4)).component_count == 2

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            torus_braid(0, 3)
        with pytest.raises(DomainError):
            torus_braid(2, -1)

    @given(st.integers(1, 6), st.integers(1, 8))
    def test_component_count_is_gcd(self, p, q):
        from math import gcd

        assert closure_stats(torus_braid(p, q)).component_count == gcd(p, q)

    @given(st.integers(2, 6), st.integers(2, 8))
    def test_positive_presentation_genus_matches_formula(self, p, q):
        from math import gcd

        if gcd(p, q) != 1:
            return
        f = band_form_of_positive_word(torus_braid(p, q))
        assert sqp_surface_stats(f).genus == torus_knot_genus(p, q)


class TestIteratedTorusBraid:
    def test_single_stage_is_torus_braid(self):
        assert iterated_torus_braid(((2, 1),)) == torus_braid(2, 3)

    def test_two_stage_cable_is_a_knot(self):
        word = iterated_torus_braid(((2, 1), (2, 3)))
        assert word is not None
        assert word.strands == 4
        assert closure_stats(word).component_count == 1

    def test_negative_twist_has_no_positive_presentation(self):
        assert iterated_torus_braid(((2, 1), (2, 0))) is None
