"""Milnor mu-bar invariants and their indeterminacy.

mu-bar(i1, ..., ik) is the Magnus coefficient of X_i1 ... X_i(k-1) in the
reduced longitude of component ik. Its indeterminacy is the gcd of the
invariants obtained by deleting one index and cyclically permuting the rest,
each taken together with its own indeterminacy.
"""

from __future__ import annotations

import itertools
import logging
import threading
from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from .chen_milnor import longitude_series, reduce_longitude
from .config import Guards
from .diagram import LinkDiagram, presentation_longitude, wirtinger
from .errors import DegreeError, GeneratorRangeError
from .magnus import MultiIndex, TruncatedSeries, coefficient, magnus_expand

LOGGER = logging.getLogger("milnorkit.milnor")


@dataclass(frozen=True)
class MilnorValue:
    index: MultiIndex
    value: int
    modulus: int = 0

    @property
    def weight(self) -> int:
        return len(self.index)

    def is_zero(self) -> bool:
        return self.value == 0

    def describe(self) -> str:
        label = ",".join(map(str, self.index))
        if self.modulus:
            return f"mu({label}) = {self.value} mod {self.modulus}"
        return f"mu({label}) = {self.value}"


@dataclass(frozen=True)
class MilnorTable:
    link: str
    n_components: int
    weight_cap: int
    entries: Dict[MultiIndex, MilnorValue]
    # None is the "at least weight_cap + 1" marker.
    first_nonvanishing_weight: Optional[int]
    computed_through: int

    def describe_first(self) -> str:
        if self.first_nonvanishing_weight is None:
            return f">= {self.weight_cap + 1}"
        return str(self.first_nonvanishing_weight)


def indices_of_weight(n_components: int, weight: int) -> Iterator[MultiIndex]:
    return itertools.product(range(1, n_components + 1), repeat=weight)


def _rotations(index: Sequence[int]) -> Iterator[MultiIndex]:
    for shift in range(len(index)):
        yield tuple(index[shift:]) + tuple(index[:shift])


class MilnorCalculator:
    """Memoized mu-bar evaluation for one diagram up to a weight cap.

    Longitude series are computed once per component at level ``weight_cap``
    and read for every lower weight. With ``word_form`` the longitude is first
    reduced as a word, under the letters guard, and then expanded.
    """

    def __init__(
        self,
        diagram: LinkDiagram,
        weight_cap: int,
        guards: Optional[Guards] = None,
        word_form: bool = False,
    ) -> None:
        if weight_cap < 2:
            raise DegreeError("weight cap must be at least 2")
        self.diagram = diagram
        self.weight_cap = weight_cap
        self.guards = guards or Guards()
        self.word_form = word_form
        self.presentation = wirtinger(diagram)
        self._series: Dict[int, TruncatedSeries] = {}
        self._raw: Dict[MultiIndex, int] = {}
        self._delta: Dict[MultiIndex, int] = {}
        self._lock = threading.Lock()

    @property
    def n_components(self) -> int:
        return self.diagram.n_components

    def check_index(self, index: Sequence[int]) -> MultiIndex:
        key = tuple(index)
        if not 2 <= len(key) <= self.weight_cap:
            raise DegreeError(f"weight {len(key)} outside 2..{self.weight_cap}")
        for i in key:
            if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= self.n_components:
                raise GeneratorRangeError(i, self.n_components)
        return key

    def _compute_longitude(self, component: int) -> TruncatedSeries:
        p = self.presentation
        if not self.word_form:
            return longitude_series(p, component, self.weight_cap, self.guards)
        word = reduce_longitude(
            p, presentation_longitude(p, component), self.weight_cap, self.guards
        )
        LOGGER.debug("component %d: reduced longitude has %d letters", component, len(word))
        return magnus_expand(word, self.weight_cap - 1, p.n_components)

    def longitude(self, component: int) -> TruncatedSeries:
        series = self._series.get(component)
        if series is None:
            series = self._compute_longitude(component)
            with self._lock:
                series = self._series.setdefault(component, series)
        return series

    def raw(self, index: MultiIndex) -> int:
        if index not in self._raw:
            value = coefficient(self.longitude(index[-1]), index[:-1])
            with self._lock:
                self._raw.setdefault(index, value)
        return self._raw[index]

    def delta(self, index: MultiIndex) -> int:
        if len(index) <= 2:
            return 0
        if index not in self._delta:
            result = 0
            for position in range(len(index)):
                rest = index[:position] + index[position + 1 :]
                for shorter in _rotations(rest):
                    result = gcd(result, self.raw(shorter), self.delta(shorter))
            with self._lock:
                self._delta.setdefault(index, result)
        return self._delta[index]

    def value(self, index: Sequence[int]) -> MilnorValue:
        key = self.check_index(index)
        modulus = self.delta(key)
        raw = self.raw(key)
        return MilnorValue(index=key, value=raw % modulus if modulus else raw, modulus=modulus)

    def weight_entries(self, weight: int) -> Dict[MultiIndex, MilnorValue]:
        return {
            index: self.value(index) for index in indices_of_weight(self.n_components, weight)
        }


def mu_bar(
    d: LinkDiagram,
    index: Sequence[int],
    weight_cap: int,
    guards: Optional[Guards] = None,
    word_form: bool = False,
) -> MilnorValue:
    key = tuple(index)
    if not 2 <= len(key) <= weight_cap:
        raise DegreeError(f"weight {len(key)} outside 2..{weight_cap}")
    # Level len(index) already determines every coefficient this needs.
    return MilnorCalculator(d, len(key), guards, word_form).value(key)


def milnor_table(
    d: LinkDiagram,
    weight_cap: int,
    guards: Optional[Guards] = None,
    complete: bool = False,
    word_form: bool = False,
) -> MilnorTable:
    """All mu-bar of weight 2..weight_cap.

    Unless ``complete`` is set, enumeration stops after the first weight that
    carries a nonzero value; that weight is always present in full.
    """
    calculator = MilnorCalculator(d, weight_cap, guards, word_form)
    entries: Dict[MultiIndex, MilnorValue] = {}
    first: Optional[int] = None
    computed = 1
    for weight in range(2, weight_cap + 1):
        level = calculator.weight_entries(weight)
        entries.update(level)
        computed = weight
        nonzero = sum(1 for value in level.values() if not value.is_zero())
        LOGGER.info("weight %d: %d entries, %d nonzero", weight, len(level), nonzero)
        if nonzero and first is None:
            first = weight
            if not complete:
                break
    LOGGER.info(
        "table for %r: first non-vanishing weight %s",
        d.name,
        first if first is not None else f">= {weight_cap + 1}",
    )
    return MilnorTable(
        link=d.name,
        n_components=d.n_components,
        weight_cap=weight_cap,
        entries=entries,
        first_nonvanishing_weight=first,
        computed_through=computed,
    )


def weight_slice(t: MilnorTable, weight: int) -> List[MilnorValue]:
    return [t.entries[key] for key in sorted(t.entries) if len(key) == weight]


def first_nonvanishing(
    d: LinkDiagram, weight_cap: int, guards: Optional[Guards] = None
) -> Tuple[Optional[int], List[MultiIndex]]:
    table = milnor_table(d, weight_cap, guards)
    weight = table.first_nonvanishing_weight
    if weight is None:
        return None, []
    witnesses = [value.index for value in weight_slice(table, weight) if not value.is_zero()]
    return weight, witnesses


def table_to_document(t: MilnorTable) -> Dict[str, Any]:
    ordered = sorted(t.entries.values(), key=lambda value: (value.weight, value.index))
    return {
        "first_nonvanishing": t.first_nonvanishing_weight,
        "entries": [
            {"index": list(value.index), "value": value.value, "modulus": value.modulus}
            for value in ordered
        ],
    }
