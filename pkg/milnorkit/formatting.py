from __future__ import annotations

import json
from typing import Any, Dict, Iterable, List, Optional, Sequence

from .diagram import LinkDiagram
from .dwyer import DwyerReport, SurgeryValidation
from .magnus import LcsDepthReport, TruncatedSeries, format_series
from .milnor import MilnorTable, MilnorValue, weight_slice

RULE = "-" * 40


def _format_index(index: Iterable[int]) -> str:
    return "(" + ",".join(map(str, index)) + ")"


def _format_matrix(matrix: Sequence[Sequence[int]]) -> List[str]:
    if not matrix:
        return []
    width = max(len(str(v)) for row in matrix for v in row)
    return ["  " + " ".join(str(v).rjust(width) for v in row) for row in matrix]


class ReportFormatter:
    """Render computation results as plain-text tables or JSON documents."""

    def __init__(self, output_format: str = "table") -> None:
        self.output_format = output_format

    @property
    def as_json(self) -> bool:
        return self.output_format == "json"

    def dump(self, document: Dict[str, Any]) -> str:
        return json.dumps(document, indent=2, sort_keys=False)

    def message(self, title: str, description: str) -> str:
        if self.as_json:
            return self.dump({"title": title, "message": description})
        return f"{title}: {description}"

    def series(
        self, s: TruncatedSeries, report: LcsDepthReport, *, depth_only: bool = False
    ) -> str:
        if self.as_json:
            document: Dict[str, Any] = {
                "word": str(report.word),
                "n_vars": s.n_vars,
                "degree_cap": s.degree_cap,
                "min_nonzero_weight": report.min_nonzero_weight,
            }
            if not depth_only:
                document["series"] = [
                    {"index": list(key), "coefficient": s.coefficients[key]}
                    for key in sorted(s.coefficients, key=lambda k: (len(k), k))
                ]
            return self.dump(document)
        lines = [] if depth_only else format_series(s)
        lines.append(f"min nonzero weight: {report.describe()}")
        return "\n".join(lines)

    def milnor_value(self, value: MilnorValue) -> str:
        if self.as_json:
            return self.dump(
                {"index": list(value.index), "value": value.value, "modulus": value.modulus}
            )
        return value.describe()

    def milnor_table(self, table: MilnorTable, document: Dict[str, Any]) -> str:
        if self.as_json:
            return self.dump(document)
        weight = table.first_nonvanishing_weight
        if weight is None:
            return f"all invariants vanish up to weight {table.weight_cap}"
        entries = weight_slice(table, weight)
        witnesses = [value for value in entries if not value.is_zero()]
        lines = [
            f"first non-vanishing weight: {weight}",
            "witnesses: " + " ".join(_format_index(value.index) for value in witnesses),
            RULE,
        ]
        lines.extend(value.describe() for value in entries)
        return "\n".join(lines)

    def dwyer(self, report: DwyerReport, document: Dict[str, Any]) -> str:
        if self.as_json:
            return self.dump(document)
        lines = [report.describe()]
        if report.witness:
            lines.append("witnesses: " + " ".join(_format_index(i) for i in report.witness))
        if report.cross_checked and report.dwyer_number is not None:
            lines.append(f"knot longitude depth {report.dwyer_number - 1} confirmed")
        return "\n".join(lines)

    def bound(self, kind: str, value: Optional[int], text: str) -> str:
        if self.as_json:
            return self.dump({"kind": kind, "bound": value})
        return text

    def diagram_summary(
        self,
        d: LinkDiagram,
        matrix: Sequence[Sequence[int]],
        validation: Optional[SurgeryValidation] = None,
    ) -> str:
        if self.as_json:
            document: Dict[str, Any] = {
                "name": d.name,
                "components": d.n_components,
                "crossings": len(d.crossings),
                "linking_matrix": [list(row) for row in matrix],
            }
            if validation is not None:
                document["hypotheses"] = [
                    {"name": check.name, "passed": check.passed, "detail": check.detail}
                    for check in validation.checks
                ]
            return self.dump(document)
        lines = [
            f"diagram: {d.name or '(unnamed)'}",
            f"components: {d.n_components}",
            f"crossings: {len(d.crossings)}",
        ]
        if matrix:
            lines.append("linking matrix:")
            lines.extend(_format_matrix(matrix))
        if validation is not None:
            lines.append(RULE)
            for check in validation.checks:
                status = "ok" if check.passed else "FAILED"
                suffix = f" ({check.detail})" if check.detail and not check.passed else ""
                lines.append(f"[{status}] {check.name}{suffix}")
        return "\n".join(lines)
