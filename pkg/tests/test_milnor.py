"""Tests for mu-bar invariants and the invariant table."""

from concurrent.futures import ThreadPoolExecutor
from itertools import permutations

import pytest
from milnorkit.config import Guards
from milnorkit.errors import DegreeError, GeneratorRangeError, ResourceGuardError
from milnorkit.milnor import (
    MilnorCalculator,
    first_nonvanishing,
    indices_of_weight,
    milnor_table,
    mu_bar,
    table_to_document,
    weight_slice,
)

TRIPLES = set(permutations((1, 2, 3)))


class TestLinkingWeight:
    def test_hopf(self, bundled):
        d = bundled("hopf")
        assert mu_bar(d, (2, 1), 2).value == 1
        assert mu_bar(d, (1, 2), 2).value == 1

    def test_hopf_with_kink(self, bundled):
        d = bundled("hopf_alt")
        assert mu_bar(d, (1, 2), 3).value == 1
        assert mu_bar(d, (1, 1), 3).value == 0

    def test_inline_hopf_is_negative(self):
        from milnorkit.diagram import parse_pd

        d = parse_pd({"crossings": [[1, 3, 2, 4], [3, 1, 4, 2]]})
        assert mu_bar(d, (1, 2), 2).value == -1

    def test_hopf_table_stops_at_weight_two(self, bundled):
        table = milnor_table(bundled("hopf"), 4)
        assert table.first_nonvanishing_weight == 2
        assert table.computed_through == 2
        assert {key for key, value in table.entries.items() if value.value} == {(1, 2), (2, 1)}

    def test_weight_three_reduced_by_linking(self, bundled):
        value = MilnorCalculator(bundled("hopf"), 3).value((1, 2, 1))
        assert value.modulus == 1
        assert value.value == 0
        assert value.describe() == "mu(1,2,1) = 0 mod 1"


class TestBorromean:
    @pytest.mark.parametrize("name", ["borromean", "borromean_alt"])
    def test_first_weight_three(self, bundled, name):
        table = milnor_table(bundled(name), 5)
        assert table.first_nonvanishing_weight == 3
        assert all(value.is_zero() for value in weight_slice(table, 2))
        nonzero = {value.index for value in weight_slice(table, 3) if not value.is_zero()}
        assert nonzero == TRIPLES
        assert abs(table.entries[(1, 2, 3)].value) == 1
        assert table.entries[(1, 2, 3)].modulus == 0

    def test_cyclic_symmetry_and_sign(self, bundled):
        calculator = MilnorCalculator(bundled("borromean"), 3)
        v = calculator.value((1, 2, 3)).value
        assert calculator.value((2, 3, 1)).value == v
        assert calculator.value((3, 1, 2)).value == v
        assert calculator.value((2, 1, 3)).value == -v
        assert calculator.value((3, 2, 1)).value == -v

    def test_single_invariant_matches_table(self, bundled):
        d = bundled("borromean")
        table = milnor_table(d, 4)
        assert mu_bar(d, (3, 1, 2), 4) == table.entries[(3, 1, 2)]

    def test_first_nonvanishing_witnesses(self, bundled):
        weight, witnesses = first_nonvanishing(bundled("borromean"), 4)
        assert weight == 3
        assert set(witnesses) == TRIPLES

    def test_complete_table(self, bundled):
        table = milnor_table(bundled("borromean"), 4, complete=True)
        assert table.first_nonvanishing_weight == 3
        assert table.computed_through == 4
        assert len(table.entries) == 9 + 27 + 81
        # Deleting a repeated index leaves a permutation of (1, 2, 3).
        spanning = [v for v in weight_slice(table, 4) if len(set(v.index)) == 3]
        assert spanning
        assert all(value.modulus == 1 and value.value == 0 for value in spanning)

    def test_concurrent_reads_agree(self, bundled):
        calculator = MilnorCalculator(bundled("borromean"), 3)
        indices = list(indices_of_weight(3, 3))
        with ThreadPoolExecutor(max_workers=4) as pool:
            parallel = list(pool.map(calculator.value, indices))
        fresh = MilnorCalculator(bundled("borromean"), 3)
        assert parallel == [fresh.value(index) for index in indices]


class TestWhitehead:
    def test_first_weight_four(self, bundled):
        table = milnor_table(bundled("whitehead"), 5)
        assert table.first_nonvanishing_weight == 4
        assert all(value.is_zero() for value in weight_slice(table, 3))
        first = table.entries[(1, 1, 2, 2)]
        assert abs(first.value) == 1
        assert table.entries[(2, 2, 1, 1)].value == first.value

    def test_reported_up_to_cap(self, bundled):
        table = milnor_table(bundled("whitehead"), 3)
        assert table.first_nonvanishing_weight is None
        assert table.describe_first() == ">= 4"


class TestTrivialAndErrors:
    def test_unlink_marker(self, bundled):
        table = milnor_table(bundled("unlink2"), 4)
        assert table.first_nonvanishing_weight is None
        assert table.describe_first() == ">= 5"
        assert table.computed_through == 4
        assert first_nonvanishing(bundled("unlink2"), 4) == (None, [])

    def test_index_out_of_range(self, bundled):
        with pytest.raises(GeneratorRangeError):
            mu_bar(bundled("hopf"), (1, 3), 3)

    def test_weight_outside_range(self, bundled):
        with pytest.raises(DegreeError):
            mu_bar(bundled("hopf"), (1,), 3)
        with pytest.raises(DegreeError):
            mu_bar(bundled("hopf"), (1, 2, 1, 2), 3)

    def test_cap_too_small(self, bundled):
        with pytest.raises(DegreeError):
            MilnorCalculator(bundled("hopf"), 1)

    def test_document_order(self, bundled):
        document = table_to_document(milnor_table(bundled("borromean"), 3))
        assert document["first_nonvanishing"] == 3
        weights = [len(entry["index"]) for entry in document["entries"]]
        assert weights == sorted(weights)
        assert document["entries"][0] == {"index": [1, 1], "value": 0, "modulus": 0}


class TestDoubledLinks:
    def test_relabelled_k2_first_weight_six(self, bundled):
        table = milnor_table(bundled("w3br"), 6)
        assert table.first_nonvanishing_weight == 6
        assert all(3 in value.index for value in weight_slice(table, 6) if not value.is_zero())


class TestCyclicSymmetry:
    @pytest.mark.parametrize("name,cap", [("borromean", 4), ("whitehead", 5), ("w3br", 6)])
    def test_rotations_agree_at_first_weight(self, bundled, name, cap):
        table = milnor_table(bundled(name), cap)
        weight = table.first_nonvanishing_weight
        assert weight is not None
        for value in weight_slice(table, weight):
            index = value.index
            for shift in range(1, weight):
                rotated = table.entries[index[shift:] + index[:shift]]
                assert (rotated.value, rotated.modulus) == (value.value, value.modulus)


class TestWordForm:
    @pytest.mark.parametrize("name,cap", [("borromean", 4), ("whitehead", 4), ("hopf_alt", 3)])
    def test_matches_series_form(self, bundled, name, cap):
        d = bundled(name)
        by_words = milnor_table(d, cap, complete=True, word_form=True)
        by_series = milnor_table(d, cap, complete=True)
        assert by_words.entries == by_series.entries

    def test_letters_guard(self, bundled):
        with pytest.raises(ResourceGuardError) as exc:
            milnor_table(bundled("borromean"), 4, Guards(max_letters=4), word_form=True)
        assert exc.value.resource == "letters"

    def test_series_form_ignores_letters_guard(self, bundled):
        table = milnor_table(bundled("borromean"), 4, Guards(max_letters=4))
        assert table.first_nonvanishing_weight == 3
