"""Tests for input validation utilities."""

import pytest
from milnorkit.validators import ValidationResult, Validator


class TestWeightCapValidator:
    def test_valid_cap(self):
        result = Validator.weight_cap(8)
        assert result.ok is True
        assert result.message is None

    def test_cap_too_small(self):
        result = Validator.weight_cap(1)
        assert result.ok is False
        assert str(Validator.MIN_CAP) in result.message

    def test_cap_too_large(self):
        result = Validator.weight_cap(Validator.MAX_CAP + 1)
        assert result.ok is False
        assert str(Validator.MAX_CAP) in result.message

    @pytest.mark.parametrize("value", ["8", 8.0, True, None])
    def test_cap_must_be_int(self, value):
        result = Validator.weight_cap(value)
        assert result.ok is False
        assert "integer" in result.message


class TestGuardValidator:
    def test_valid_guard(self):
        assert Validator.guard("terms", 1000).ok is True

    def test_zero_guard(self):
        result = Validator.guard("letters", 0)
        assert result.ok is False
        assert "letters" in result.message

    def test_guard_not_int(self):
        assert Validator.guard("terms", "many").ok is False


class TestOutputFormatValidator:
    @pytest.mark.parametrize("value", ["table", "json"])
    def test_known_formats(self, value):
        assert Validator.output_format(value).ok is True

    def test_unknown_format(self):
        result = Validator.output_format("yaml")
        assert result.ok is False
        assert "table" in result.message


class TestVariableCount:
    def test_positive(self):
        assert Validator.variable_count(3).ok is True

    @pytest.mark.parametrize("value", [0, -2, "3"])
    def test_rejected(self, value):
        assert Validator.variable_count(value).ok is False


class TestSanitize:
    def test_strips(self):
        assert Validator.sanitize("  x1 x2  ") == "x1 x2"

    def test_none_passes_through(self):
        assert Validator.sanitize(None) is None

    def test_result_type(self):
        assert isinstance(Validator.weight_cap(4), ValidationResult)
