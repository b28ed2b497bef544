from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional


@dataclass
class ValidationResult:
    ok: bool
    message: Optional[str] = None


class Validator:
    MIN_CAP = 2
    MAX_CAP = 16
    OUTPUT_FORMATS = ("table", "json")

    @staticmethod
    def weight_cap(value: Any) -> ValidationResult:
        if isinstance(value, bool) or not isinstance(value, int):
            return ValidationResult(False, "Weight cap must be an integer.")
        if value < Validator.MIN_CAP:
            return ValidationResult(False, f"Weight cap must be at least {Validator.MIN_CAP}.")
        if value > Validator.MAX_CAP:
            return ValidationResult(False, f"Weight cap must be at most {Validator.MAX_CAP}.")
        return ValidationResult(True)

    @staticmethod
    def guard(name: str, value: Any) -> ValidationResult:
        if isinstance(value, bool) or not isinstance(value, int):
            return ValidationResult(False, f"Guard {name} must be an integer.")
        if value <= 0:
            return ValidationResult(False, f"Guard {name} must be positive.")
        return ValidationResult(True)

    @staticmethod
    def output_format(value: str) -> ValidationResult:
        if value not in Validator.OUTPUT_FORMATS:
            allowed = ", ".join(Validator.OUTPUT_FORMATS)
            return ValidationResult(False, f"Output format must be one of: {allowed}.")
        return ValidationResult(True)

    @staticmethod
    def variable_count(value: Any) -> ValidationResult:
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            return ValidationResult(False, "Variable count must be a positive integer.")
        return ValidationResult(True)

    @staticmethod
    def sanitize(text: Optional[str]) -> Optional[str]:
        return text.strip() if text else text
