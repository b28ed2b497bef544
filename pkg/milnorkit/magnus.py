"""Magnus expansion of free-group words into truncated noncommutative series.

The series ring is Z<<X_1, ..., X_n>> cut off above a degree cap. A monomial
X_{i1} X_{i2} ... X_{ik} is keyed by the tuple (i1, ..., ik); the empty tuple is
the constant term. Coefficients are Python ints, so nothing overflows.

Membership convention: a word lies in the q-th lower central series term F_q
exactly when its Magnus coefficients of weights 1..q-1 all vanish.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .errors import DegreeError, GeneratorRangeError, SeriesMismatchError
from .freegroup import Word

MultiIndex = Tuple[int, ...]


@dataclass(frozen=True)
class TruncatedSeries:
    n_vars: int
    degree_cap: int
    coefficients: Mapping[MultiIndex, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.degree_cap < 1:
            raise DegreeError("degree cap must be at least 1")
        clean: Dict[MultiIndex, int] = {}
        for key, value in self.coefficients.items():
            if len(key) > self.degree_cap:
                raise DegreeError(f"term {key} exceeds degree cap {self.degree_cap}")
            if any(i < 1 or i > self.n_vars for i in key):
                raise GeneratorRangeError(max(key), self.n_vars)
            if value:
                clean[tuple(key)] = value
        object.__setattr__(self, "coefficients", clean)

    @classmethod
    def _trusted(
        cls, n_vars: int, degree_cap: int, coefficients: Dict[MultiIndex, int]
    ) -> "TruncatedSeries":
        series = object.__new__(cls)
        object.__setattr__(series, "n_vars", n_vars)
        object.__setattr__(series, "degree_cap", degree_cap)
        object.__setattr__(
            series, "coefficients", {k: v for k, v in coefficients.items() if v}
        )
        return series

    def __len__(self) -> int:
        return len(self.coefficients)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_multiply(self, other)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __neg__(self) -> "TruncatedSeries":
        return series_negate(self)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, series_negate(other))


@dataclass(frozen=True)
class LcsDepthReport:
    word: Word
    depth_cap: int
    # None stands for "no nonzero coefficient in weights 1..depth_cap".
    min_nonzero_weight: Optional[int]

    def describe(self) -> str:
        if self.min_nonzero_weight is None:
            return f"none up to weight {self.depth_cap}"
        return str(self.min_nonzero_weight)


def _check_compatible(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.n_vars != b.n_vars or a.degree_cap != b.degree_cap:
        raise SeriesMismatchError(
            f"series shapes differ: ({a.n_vars} vars, cap {a.degree_cap}) "
            f"vs ({b.n_vars} vars, cap {b.degree_cap})"
        )


def series_one(n_vars: int, degree_cap: int) -> TruncatedSeries:
    return TruncatedSeries._trusted(n_vars, degree_cap, {(): 1})


def series_from_terms(
    n_vars: int, degree_cap: int, terms: Mapping[MultiIndex, int]
) -> TruncatedSeries:
    return TruncatedSeries(n_vars, degree_cap, dict(terms))


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_compatible(a, b)
    out = dict(a.coefficients)
    for key, value in b.coefficients.items():
        out[key] = out.get(key, 0) + value
    return TruncatedSeries._trusted(a.n_vars, a.degree_cap, out)


def series_negate(a: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries._trusted(
        a.n_vars, a.degree_cap, {k: -v for k, v in a.coefficients.items()}
    )


def _by_weight(s: TruncatedSeries) -> List[List[Tuple[MultiIndex, int]]]:
    buckets: List[List[Tuple[MultiIndex, int]]] = [[] for _ in range(s.degree_cap + 1)]
    for key, value in s.coefficients.items():
        buckets[len(key)].append((key, value))
    return buckets


def series_multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Noncommutative product, never forming a term above the cap.

    Cost is bounded by terms(a) * terms(b) but only weight-compatible pairs are
    visited, which is what keeps the full-depth longitude iteration tractable.
    """
    _check_compatible(a, b)
    cap = a.degree_cap
    buckets = _by_weight(b)
    out: Dict[MultiIndex, int] = {}
    for left, lv in a.coefficients.items():
        room = cap - len(left)
        for weight in range(room + 1):
            for right, rv in buckets[weight]:
                key = left + right
                out[key] = out.get(key, 0) + lv * rv
    return TruncatedSeries._trusted(a.n_vars, cap, out)


def _right_multiply_letter(
    coefficients: Dict[MultiIndex, int], letter: int, cap: int
) -> Dict[MultiIndex, int]:
    index = abs(letter)
    out = dict(coefficients)
    term = coefficients
    # x_i -> 1 + X_i ; x_i^-1 -> 1 - X_i + X_i^2 - ...
    while True:
        term = {
            key + (index,): (value if letter > 0 else -value)
            for key, value in term.items()
            if len(key) < cap
        }
        if not term:
            break
        for key, value in term.items():
            out[key] = out.get(key, 0) + value
        if letter > 0:
            break
    return {k: v for k, v in out.items() if v}


def generator_series(letter: int, n_vars: int, degree_cap: int) -> TruncatedSeries:
    if abs(letter) > n_vars:
        raise GeneratorRangeError(abs(letter), n_vars)
    coefficients = _right_multiply_letter({(): 1}, letter, degree_cap)
    return TruncatedSeries._trusted(n_vars, degree_cap, coefficients)


def magnus_expand(w: Word, degree_cap: int, n_vars: Optional[int] = None) -> TruncatedSeries:
    n = n_vars if n_vars is not None else max(w.max_index, 1)
    if w.max_index > n:
        raise GeneratorRangeError(w.max_index, n)
    if degree_cap < 1:
        raise DegreeError("degree cap must be at least 1")
    coefficients: Dict[MultiIndex, int] = {(): 1}
    for letter in w.letters:
        coefficients = _right_multiply_letter(coefficients, letter, degree_cap)
    return TruncatedSeries._trusted(n, degree_cap, coefficients)


def series_inverse(s: TruncatedSeries) -> TruncatedSeries:
    """Inverse of a series with constant term 1, as sum of (1 - s)^m."""
    if s.coefficients.get((), 0) != 1:
        raise DegreeError("only series with constant term 1 are inverted")
    one = series_one(s.n_vars, s.degree_cap)
    nilpotent = series_add(one, series_negate(s))
    result = one
    term = one
    for _ in range(s.degree_cap):
        term = series_multiply(term, nilpotent)
        if not term.coefficients:
            break
        result = series_add(result, term)
    return result


def coefficient(s: TruncatedSeries, index: Iterable[int]) -> int:
    key = tuple(index)
    if len(key) > s.degree_cap:
        raise DegreeError(f"weight {len(key)} exceeds degree cap {s.degree_cap}")
    return s.coefficients.get(key, 0)


def min_nonzero_weight(s: TruncatedSeries) -> Optional[int]:
    weights = [len(key) for key in s.coefficients if key]
    return min(weights) if weights else None


def lcs_min_weight(w: Word, depth_cap: int, n_vars: Optional[int] = None) -> LcsDepthReport:
    if depth_cap < 2:
        raise DegreeError("depth cap must be at least 2")
    series = magnus_expand(w, depth_cap, n_vars)
    return LcsDepthReport(word=w, depth_cap=depth_cap, min_nonzero_weight=min_nonzero_weight(series))


def in_lcs_term(w: Word, q: int, depth_cap: int, n_vars: Optional[int] = None) -> bool:
    if q < 1:
        raise DegreeError("lower central series terms are numbered from 1")
    if q > depth_cap:
        raise DegreeError(f"q = {q} exceeds depth cap {depth_cap}")
    if q == 1:
        return True
    series = magnus_expand(w, q - 1, n_vars)
    return min_nonzero_weight(series) is None


def format_series(s: TruncatedSeries) -> List[str]:
    lines = []
    for key in sorted(s.coefficients, key=lambda k: (len(k), k)):
        value = s.coefficients[key]
        lines.append(f"{value} ." if not key else f"{value} " + " ".join(map(str, key)))
    return lines
