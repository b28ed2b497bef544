"""Tests for the truncated Magnus expansion."""

import pytest
from milnorkit.errors import DegreeError, GeneratorRangeError, SeriesMismatchError
from milnorkit.freegroup import Word, commutator, conjugate, invert
from milnorkit.magnus import (
    TruncatedSeries,
    coefficient,
    format_series,
    generator_series,
    in_lcs_term,
    lcs_min_weight,
    magnus_expand,
    min_nonzero_weight,
    series_add,
    series_inverse,
    series_multiply,
    series_one,
)

X1, X2, X3 = Word.generator(1), Word.generator(2), Word.generator(3)


class TestGenerators:
    def test_positive_letter(self):
        s = generator_series(1, 2, 3)
        assert dict(s.coefficients) == {(): 1, (1,): 1}

    def test_inverse_letter_is_geometric(self):
        s = generator_series(-2, 2, 3)
        assert dict(s.coefficients) == {(): 1, (2,): -1, (2, 2): 1, (2, 2, 2): -1}

    def test_out_of_range(self):
        with pytest.raises(GeneratorRangeError):
            generator_series(3, 2, 4)


class TestExpansion:
    def test_identity(self):
        assert dict(magnus_expand(Word.identity(), 4, 2).coefficients) == {(): 1}

    def test_commutator_leading_terms(self):
        s = magnus_expand(commutator(X1, X2), 2, 2)
        assert dict(s.coefficients) == {(): 1, (1, 2): 1, (2, 1): -1}

    def test_is_a_homomorphism(self, random_word):
        for _ in range(15):
            u, v = random_word(3, 7), random_word(3, 7)
            assert magnus_expand(u * v, 4, 3) == series_multiply(
                magnus_expand(u, 4, 3), magnus_expand(v, 4, 3)
            )

    def test_inverse_word_gives_inverse_series(self, random_word):
        for _ in range(10):
            w = random_word(2, 8)
            assert series_inverse(magnus_expand(w, 5, 2)) == magnus_expand(invert(w), 5, 2)

    def test_product_with_inverse_is_one(self, random_word):
        w = random_word(3, 10)
        s = magnus_expand(w, 4, 3)
        assert series_multiply(s, series_inverse(s)) == series_one(3, 4)

    def test_word_beyond_variable_count(self):
        with pytest.raises(GeneratorRangeError):
            magnus_expand(Word((1, 4)), 3, 3)

    def test_infers_variable_count(self):
        assert magnus_expand(Word((1, -3)), 2).n_vars == 3


class TestSeriesShape:
    def test_term_above_cap(self):
        with pytest.raises(DegreeError):
            TruncatedSeries(2, 2, {(1, 2, 1): 1})

    def test_zero_coefficients_dropped(self):
        s = TruncatedSeries(2, 2, {(): 1, (1,): 0})
        assert (1,) not in s.coefficients

    def test_mismatched_shapes(self):
        with pytest.raises(SeriesMismatchError):
            series_add(series_one(2, 3), series_one(3, 3))
        with pytest.raises(SeriesMismatchError):
            series_multiply(series_one(2, 3), series_one(2, 4))

    def test_coefficient_above_cap(self):
        with pytest.raises(DegreeError):
            coefficient(series_one(2, 2), (1, 1, 1))

    def test_inverse_needs_unit_constant(self):
        with pytest.raises(DegreeError):
            series_inverse(TruncatedSeries(1, 2, {(1,): 1}))

    def test_format(self):
        assert format_series(generator_series(1, 1, 2)) == ["1 .", "1 1"]


class TestLowerCentralSeries:
    def test_generator_has_weight_one(self):
        assert min_nonzero_weight(magnus_expand(X1, 3, 1)) == 1

    def test_commutator_depths(self):
        assert lcs_min_weight(commutator(X1, X2), 4).min_nonzero_weight == 2
        triple = commutator(commutator(X1, X2), X3)
        assert lcs_min_weight(triple, 4).min_nonzero_weight == 3

    def test_report_when_nothing_found(self):
        report = lcs_min_weight(Word.identity(), 3, 2)
        assert report.min_nonzero_weight is None
        assert report.describe() == "none up to weight 3"

    def test_membership(self):
        c = commutator(X1, X2)
        assert in_lcs_term(c, 1, 4)
        assert in_lcs_term(c, 2, 4)
        assert not in_lcs_term(c, 3, 4)
        assert in_lcs_term(commutator(c, X1), 3, 4)

    def test_membership_above_cap(self):
        with pytest.raises(DegreeError):
            in_lcs_term(X1, 5, 4)

    def test_depth_cap_minimum(self):
        with pytest.raises(DegreeError):
            lcs_min_weight(X1, 1)


class TestLawsAtScale:
    """Homomorphism and inverse laws over many random pairs."""

    def test_five_hundred_pairs(self, random_word):
        for trial in range(500):
            n = trial % 4 + 1
            u, v = random_word(n, 12), random_word(n, 12)
            left = magnus_expand(u * v, 6, n)
            assert left == series_multiply(magnus_expand(u, 6, n), magnus_expand(v, 6, n))
            assert series_multiply(left, magnus_expand(invert(u * v), 6, n)) == series_one(n, 6)

    def test_membership_is_conjugation_invariant(self, random_word):
        for trial in range(100):
            n = trial % 3 + 2
            w = commutator(commutator(random_word(n, 3), random_word(n, 3)), random_word(n, 2))
            v = random_word(n, 5)
            for q in range(1, 5):
                assert in_lcs_term(conjugate(w, v), q, 4, n) == in_lcs_term(w, q, 4, n)
