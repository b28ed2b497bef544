"""Tests for surgery presentations, Dwyer numbers and the bounds."""

import math

import pytest
from milnorkit.dwyer import (
    band_sum_bound,
    dwyer_number,
    family_k,
    knotification_bound,
    knotification_bound_from_link,
    knotified_link_weight,
    parse_surgery,
    report_to_document,
    surgered_order,
    validate_surgery,
)
from milnorkit.errors import DiagramError, HypothesisError
from milnorkit.fixtures import load_bundled_document


def _surgery(name, **overrides):
    document = dict(load_bundled_document(name))
    document.update(overrides)
    return parse_surgery(document)


# U1 and U2 form a Hopf link; K is a crossingless unknot beside them.
LINKED_SURGERY = {
    "name": "linked",
    "crossings": [[1, 4, 2, 3], [3, 2, 4, 1]],
    "components": [[], [1, 2], [3, 4]],
    "unlink_assertion": True,
}


class TestParseSurgery:
    def test_bundled_whitehead(self):
        s = family_k(1)
        assert s.knot_component == 1
        assert s.surgered == (2,)
        assert s.framings == (0,)
        assert s.unlink_assertion is True

    def test_defaults(self):
        s = parse_surgery(load_bundled_document("borromean"))
        assert s.surgered == (2, 3)
        assert s.framings == (0, 0)
        assert s.unlink_assertion is False

    def test_knot_must_be_first(self):
        with pytest.raises(DiagramError):
            _surgery("whitehead", knot_component=2)

    def test_surgered_must_cover_the_rest(self):
        with pytest.raises(DiagramError):
            _surgery("k2", surgered=[2, 2])

    def test_framing_count(self):
        with pytest.raises(DiagramError):
            _surgery("k2", framings=[0])

    def test_assertion_is_boolean(self):
        with pytest.raises(DiagramError):
            _surgery("whitehead", unlink_assertion="yes")

    def test_family_range(self):
        with pytest.raises(ValueError):
            family_k(4)


class TestHypotheses:
    def test_whitehead_passes(self):
        validation = validate_surgery(family_k(1), 5)
        assert validation.ok
        assert validation.failures == []

    def test_hopf_fails_linking(self):
        s = _surgery("hopf", unlink_assertion=True)
        with pytest.raises(HypothesisError) as exc:
            validate_surgery(s, 4)
        assert any("lk(K, U1)" in failure for failure in exc.value.failures)

    def test_linked_surgery_components(self):
        validation = validate_surgery(parse_surgery(LINKED_SURGERY), 4, strict=False)
        assert not validation.ok
        failures = " ".join(validation.failures)
        assert "lk(U1, U2) = 0" in failures
        assert "surgered sublink" in failures

    def test_missing_assertion_and_framing(self):
        s = _surgery("whitehead", unlink_assertion=False, framings=[1])
        validation = validate_surgery(s, 4, strict=False)
        names = {check.name for check in validation.checks if not check.passed}
        assert names == {"surgery framings are 0", "surgered sublink asserted to be an unlink"}

    def test_strict_failure_blocks_computation(self):
        with pytest.raises(HypothesisError):
            dwyer_number(_surgery("borromean"), 4)


class TestDwyerNumber:
    def test_whitehead_is_four(self):
        report = dwyer_number(family_k(1), 5, cross_check=True)
        assert report.dwyer_number == 4
        assert report.massey_weight == 4
        assert report.cross_checked is True
        assert report.lower_bound is None
        assert report.describe() == "D(K) = 4; longitude in G_3 \\ G_4; first Massey weight 4"

    def test_witnesses_involve_the_knot(self):
        report = dwyer_number(family_k(1), 4)
        assert report.witness
        assert all(1 in index for index in report.witness)

    def test_borromean_surgery_is_three(self):
        report = dwyer_number(_surgery("borromean", unlink_assertion=True), 4, cross_check=True)
        assert report.dwyer_number == 3
        assert report.longitude_depth == "longitude in G_2 \\ G_3"

    def test_permuting_surgered_components(self):
        s = _surgery("borromean", unlink_assertion=True)
        swapped = surgered_order(s, [3, 2])
        assert dwyer_number(swapped, 4).dwyer_number == dwyer_number(s, 4).dwyer_number

    def test_order_must_permute(self):
        with pytest.raises(ValueError):
            surgered_order(_surgery("borromean", unlink_assertion=True), [2, 2])

    def test_lower_bound_below_cap(self):
        report = dwyer_number(family_k(1), 3)
        assert report.dwyer_number is None
        assert report.lower_bound == 4
        assert report.describe() == "D(K) >= 4; no non-vanishing invariant up to weight 3"

    def test_lower_bound_never_below_three(self):
        document = {"crossings": [], "zero_crossing_components": 2, "unlink_assertion": True}
        s = parse_surgery(document)
        report = dwyer_number(s, 2)
        assert report.lower_bound == 3

    def test_document(self):
        document = report_to_document(dwyer_number(family_k(1), 4))
        assert document["dwyer_number"] == 4
        assert document["cap_used"] == 4
        assert document["longitude_depth"] == "longitude in G_3 \\ G_4"
        assert [1, 1, 2, 2] in document["witness"] or [2, 2, 1, 1] in document["witness"]

    def test_k2_is_six(self):
        report = dwyer_number(family_k(2), 6, cross_check=True)
        assert report.dwyer_number == 6

    def test_k2_above_its_weight(self):
        report = dwyer_number(family_k(2), 7)
        assert report.dwyer_number == 6
        assert report.lower_bound is None

    def test_k2_surgered_order(self):
        swapped = surgered_order(family_k(2), [3, 2])
        assert dwyer_number(swapped, 6).dwyer_number == 6

    @pytest.mark.slow
    def test_k3_is_eight(self):
        report = dwyer_number(family_k(3), 8)
        assert report.dwyer_number == 8
        assert report.massey_weight == 8


class TestBounds:
    def test_examples(self):
        assert knotification_bound(2, 9) == 4
        assert knotification_bound(1, 5) == 4
        assert band_sum_bound(6, 1) == 3
        assert knotified_link_weight(3) == 4

    def test_formulas_on_a_grid(self):
        for n in range(1, 7):
            for q in range(2, 13):
                assert knotification_bound(n, q) == math.ceil((q - 1) / n)
        for k in range(1, 7):
            for r in range(2, 13):
                assert band_sum_bound(r, k) == math.floor(r / (k + 1))

    def test_monotone(self):
        for n in range(1, 6):
            for q in range(2, 12):
                assert knotification_bound(n, q) <= knotification_bound(n, q + 1)
                assert knotification_bound(n, q) >= knotification_bound(n + 1, q)

    def test_band_sum_monotone(self):
        for k in range(1, 6):
            for r in range(2, 12):
                assert band_sum_bound(r, k) <= band_sum_bound(r + 1, k)
                assert band_sum_bound(r, k) >= band_sum_bound(r, k + 1)

    @pytest.mark.parametrize(
        "call",
        [
            lambda: knotification_bound(0, 4),
            lambda: knotification_bound(2, 1),
            lambda: band_sum_bound(1, 1),
            lambda: band_sum_bound(4, 0),
            lambda: knotified_link_weight(0),
        ],
    )
    def test_bad_arguments(self, call):
        with pytest.raises(ValueError):
            call()

    def test_bound_from_link(self, bundled):
        assert knotification_bound_from_link(bundled("borromean"), 4) == 1
        assert knotification_bound_from_link(bundled("whitehead"), 5) == 2
        assert knotification_bound_from_link(bundled("unlink2"), 4) is None
