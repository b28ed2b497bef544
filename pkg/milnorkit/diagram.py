"""Oriented PD-code link diagrams.

Conventions
-----------
A crossing ``[a, b, c, d]`` lists the four edge labels counterclockwise, starting
at the incoming under-strand ``a``; the under-strand runs ``a -> c``. The
crossing sign is +1 when the over-strand runs ``b -> d`` (its direction is the
under direction turned a counterclockwise quarter) and -1 when it runs
``d -> b``.

Edge labels of one component form a contiguous range traversed in increasing
order, wrapping from the last label to the first. A Wirtinger arc is a maximal
run of edges joined through over-passages; arcs are the generators of the
Wirtinger presentation.
"""

from __future__ import annotations

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from .errors import DiagramError
from .freegroup import Word

LOGGER = logging.getLogger("milnorkit.diagram")

OVER_DIRECTIONS = ("ascending", "descending")

Range = Optional[Tuple[int, int]]


@dataclass(frozen=True)
class Crossing:
    index: int
    labels: Tuple[int, int, int, int]
    sign: int

    @property
    def under_in(self) -> int:
        return self.labels[0]

    @property
    def under_out(self) -> int:
        return self.labels[2]

    @property
    def over_in(self) -> int:
        return self.labels[1] if self.sign > 0 else self.labels[3]

    @property
    def over_out(self) -> int:
        return self.labels[3] if self.sign > 0 else self.labels[1]


@dataclass(frozen=True)
class LinkDiagram:
    name: str
    crossings: Tuple[Crossing, ...]
    # One entry per component in order; None marks a crossingless unknot.
    ranges: Tuple[Range, ...]
    _component_of: Dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        lookup: Dict[int, int] = {}
        for component, span in enumerate(self.ranges, start=1):
            if span is not None:
                for label in range(span[0], span[1] + 1):
                    lookup[label] = component
        object.__setattr__(self, "_component_of", lookup)

    @property
    def n_components(self) -> int:
        return len(self.ranges)

    @property
    def zero_crossing_components(self) -> int:
        return sum(1 for span in self.ranges if span is None)

    def component_of(self, label: int) -> int:
        try:
            return self._component_of[label]
        except KeyError:
            raise DiagramError(f"unknown edge label {label}") from None

    def successor(self, label: int) -> int:
        span = self.ranges[self.component_of(label) - 1]
        assert span is not None
        return span[0] if label == span[1] else label + 1

    def check_component(self, component: int) -> None:
        if not 1 <= component <= self.n_components:
            raise DiagramError(
                f"component {component} outside 1..{self.n_components}", "component"
            )


@dataclass(frozen=True)
class WirtingerRelation:
    """x_outgoing = x_over^sign * x_incoming * x_over^-sign."""

    incoming: int
    over: int
    outgoing: int
    sign: int
    crossing: int


@dataclass(frozen=True)
class WirtingerPresentation:
    n_components: int
    n_arcs: int
    generator_component: Mapping[int, int]
    relations: Tuple[WirtingerRelation, ...]
    base_meridian: Mapping[int, int]
    # Relation indices met as under-passages, walking each component from its base arc.
    traversals: Mapping[int, Tuple[int, ...]]


@dataclass(frozen=True)
class LongitudeWord:
    component: int
    word: Word
    base_arc: int
    framing: str = "zero-framed"


# --------------------------------------------------------------------------- parsing


def _positive_int(value: Any, location: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise DiagramError(f"expected a positive integer, got {value!r}", location)
    return value


def _read_crossings(raw: Any) -> List[Tuple[int, int, int, int]]:
    if not isinstance(raw, list):
        raise DiagramError("'crossings' must be a list", "crossings")
    tuples = []
    for position, entry in enumerate(raw):
        location = f"crossing {position}"
        if not isinstance(entry, list) or len(entry) != 4:
            raise DiagramError("a crossing lists exactly four labels", location)
        tuples.append(tuple(_positive_int(v, location) for v in entry))
    return tuples  # type: ignore[return-value]


def _discover_ranges(graph: nx.Graph) -> List[Tuple[int, int]]:
    ranges = []
    for piece in nx.connected_components(graph):
        low, high = min(piece), max(piece)
        if len(piece) != high - low + 1:
            raise DiagramError(
                "component labels are not a contiguous range", f"labels {sorted(piece)}"
            )
        ranges.append((low, high))
    return sorted(ranges)


def _read_ranges(raw: Any, graph: nx.Graph, labels: set) -> List[Range]:
    if raw is None:
        return list(_discover_ranges(graph)) if labels else []
    if not isinstance(raw, list):
        raise DiagramError("'components' must be a list", "components")
    ranges: List[Range] = []
    covered: set = set()
    for position, entry in enumerate(raw):
        location = f"component {position + 1}"
        if entry == [] or entry is None:
            ranges.append(None)
            continue
        if not isinstance(entry, list) or len(entry) != 2:
            raise DiagramError("a component is given as [first_label, last_label]", location)
        first, last = (_positive_int(v, location) for v in entry)
        if first > last:
            raise DiagramError("first label exceeds last label", location)
        span = set(range(first, last + 1))
        if span & covered:
            raise DiagramError("label ranges overlap", location)
        covered |= span
        if first not in graph or set(nx.node_connected_component(graph, first)) != span:
            raise DiagramError("label range is not one traversal component", location)
        ranges.append((first, last))
    if covered != labels:
        missing = sorted(labels - covered)
        raise DiagramError(f"labels {missing} belong to no declared component", "components")
    return ranges


def _read_over_dir(raw: Any, n_crossings: int) -> Dict[int, str]:
    if raw is None:
        return {}
    if not isinstance(raw, dict):
        raise DiagramError("'over_dir' must be an object", "over_dir")
    result = {}
    for key, value in raw.items():
        try:
            position = int(key)
        except (TypeError, ValueError):
            raise DiagramError(f"bad crossing index {key!r}", "over_dir") from None
        if not 0 <= position < n_crossings:
            raise DiagramError(f"crossing index {position} out of range", "over_dir")
        if value not in OVER_DIRECTIONS:
            raise DiagramError(
                f"expected 'ascending' or 'descending', got {value!r}", f"over_dir {position}"
            )
        result[position] = value
    return result


def _resolve_signs(
    tuples: Sequence[Tuple[int, int, int, int]],
    ranges: Sequence[Range],
    over_dir: Mapping[int, str],
) -> List[int]:
    component_of: Dict[int, int] = {}
    for component, span in enumerate(ranges, start=1):
        if span is not None:
            for label in range(span[0], span[1] + 1):
                component_of[label] = component

    def successor(label: int) -> int:
        span = ranges[component_of[label] - 1]
        assert span is not None
        return span[0] if label == span[1] else label + 1

    def size(label: int) -> int:
        span = ranges[component_of[label] - 1]
        assert span is not None
        return span[1] - span[0] + 1

    under_passage: Dict[int, Tuple[int, int]] = {}
    for position, (a, b, c, d) in enumerate(tuples):
        location = f"crossing {position}"
        if component_of[a] != component_of[c] or component_of[b] != component_of[d]:
            raise DiagramError("strand labels belong to different components", location)
        if size(a) < 2 or size(b) < 2:
            raise DiagramError("a component needs at least two edges", location)
        if successor(a) != c:
            raise DiagramError(f"under-strand {a} -> {c} breaks the traversal order", location)
        under_passage.setdefault(component_of[a], (a, c))

    signs = []
    for position, (a, b, c, d) in enumerate(tuples):
        location = f"crossing {position}"
        forward, backward = successor(b) == d, successor(d) == b
        if not (forward or backward):
            raise DiagramError(f"over-strand labels {b}, {d} are not consecutive", location)
        derived: Optional[int] = None
        if forward and not backward:
            derived = 1
        elif backward and not forward:
            derived = -1
        elif component_of[b] in under_passage:
            # Two-edge component: the under-passage elsewhere fixes which edge leads in here.
            enters, leaves = under_passage[component_of[b]]
            derived = 1 if (b, d) == (leaves, enters) else -1
        requested: Optional[int] = None
        if position in over_dir:
            ascending = over_dir[position] == "ascending"
            requested = 1 if (b < d) == ascending else -1
        if derived is None and requested is None:
            raise DiagramError(
                "over-strand orientation is ambiguous; supply over_dir for this crossing",
                location,
            )
        if derived is not None and requested is not None and derived != requested:
            raise DiagramError("over_dir contradicts the traversal order", location)
        signs.append(derived if derived is not None else requested)  # type: ignore[arg-type]
    return signs


def _check_heads_and_tails(crossings: Sequence[Crossing]) -> None:
    heads = Counter()
    tails = Counter()
    for crossing in crossings:
        heads[crossing.under_in] += 1
        heads[crossing.over_in] += 1
        tails[crossing.under_out] += 1
        tails[crossing.over_out] += 1
    for label in sorted(set(heads) | set(tails)):
        if heads[label] != 1 or tails[label] != 1:
            raise DiagramError("inconsistent component traversal", f"label {label}")


def parse_pd(document: Union[str, Mapping[str, Any]]) -> LinkDiagram:
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise DiagramError(f"malformed JSON: {exc}") from None
    if not isinstance(document, Mapping):
        raise DiagramError("a diagram document is a JSON object")

    name = document.get("name") or ""
    tuples = _read_crossings(document.get("crossings", []))
    counts = Counter(label for entry in tuples for label in entry)
    for label, count in sorted(counts.items()):
        if count != 2:
            raise DiagramError(f"label occurs {count} times, expected 2", f"label {label}")

    graph = nx.Graph()
    for a, b, c, d in tuples:
        graph.add_edge(a, c)
        graph.add_edge(b, d)
    ranges = _read_ranges(document.get("components"), graph, set(counts))

    extra = document.get("zero_crossing_components", 0)
    if isinstance(extra, bool) or not isinstance(extra, int) or extra < 0:
        raise DiagramError("must be a non-negative integer", "zero_crossing_components")
    ranges.extend([None] * extra)

    over_dir = _read_over_dir(document.get("over_dir"), len(tuples))
    signs = _resolve_signs(tuples, ranges, over_dir)
    crossings = tuple(
        Crossing(index=position, labels=entry, sign=sign)
        for position, (entry, sign) in enumerate(zip(tuples, signs))
    )
    _check_heads_and_tails(crossings)
    diagram = LinkDiagram(name=str(name), crossings=crossings, ranges=tuple(ranges))
    LOGGER.debug(
        "parsed diagram %r: %d components, %d crossings",
        diagram.name,
        diagram.n_components,
        len(crossings),
    )
    return diagram


def load_diagram(source: Union[str, Path]) -> LinkDiagram:
    """Parse a diagram from a file path or from inline JSON text."""
    return parse_pd(read_document(source))


def read_document(source: Union[str, Path]) -> Dict[str, Any]:
    text = str(source)
    if isinstance(source, str) and text.lstrip().startswith("{"):
        raw = text
    else:
        path = Path(source)
        if not path.is_file():
            raise DiagramError(f"no such file: {path}")
        raw = path.read_text(encoding="utf-8")
    try:
        document = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"malformed JSON: {exc}") from None
    if not isinstance(document, dict):
        raise DiagramError("a diagram document is a JSON object")
    return document


def to_document(d: LinkDiagram) -> Dict[str, Any]:
    over_dir = {}
    for crossing in d.crossings:
        span = d.ranges[d.component_of(crossing.over_in) - 1]
        if span is not None and span[1] - span[0] == 1:
            ascending = crossing.over_in < crossing.over_out
            over_dir[str(crossing.index)] = "ascending" if ascending else "descending"
    document: Dict[str, Any] = {
        "name": d.name,
        "crossings": [list(crossing.labels) for crossing in d.crossings],
        "components": [list(span) if span is not None else [] for span in d.ranges],
    }
    if over_dir:
        document["over_dir"] = over_dir
    return document


# --------------------------------------------------------------------------- numbers


def _check_pair(d: LinkDiagram, i: int, j: int) -> None:
    d.check_component(i)
    d.check_component(j)
    if i == j:
        raise DiagramError("linking number needs two distinct components", "component")


def linking_number(d: LinkDiagram, i: int, j: int) -> int:
    _check_pair(d, i, j)
    total = 0
    for crossing in d.crossings:
        pair = {d.component_of(crossing.under_in), d.component_of(crossing.over_in)}
        if pair == {i, j}:
            total += crossing.sign
    half, odd = divmod(total, 2)
    if odd:
        raise DiagramError(f"odd signed crossing count between {i} and {j}", "component")
    return half


def linking_matrix(d: LinkDiagram) -> List[List[int]]:
    n = d.n_components
    matrix = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            matrix[i - 1][j - 1] = matrix[j - 1][i - 1] = linking_number(d, i, j)
    return matrix


def writhe(d: LinkDiagram, component: Optional[int] = None) -> int:
    """Self-writhe of one component, or the total writhe when none is given."""
    if component is None:
        return sum(crossing.sign for crossing in d.crossings)
    d.check_component(component)
    return sum(
        crossing.sign
        for crossing in d.crossings
        if d.component_of(crossing.under_in) == component == d.component_of(crossing.over_in)
    )


# --------------------------------------------------------------------------- Wirtinger


def _passages(d: LinkDiagram, component: int) -> List[Tuple[int, bool]]:
    """(crossing index, is_under) for each passage, walking from the lowest label."""
    span = d.ranges[component - 1]
    if span is None:
        return []
    ends_at: Dict[int, Tuple[int, bool]] = {}
    for crossing in d.crossings:
        ends_at[crossing.under_in] = (crossing.index, True)
        ends_at[crossing.over_in] = (crossing.index, False)
    return [ends_at[label] for label in range(span[0], span[1] + 1)]


def wirtinger(d: LinkDiagram) -> WirtingerPresentation:
    under_out = {crossing.under_out for crossing in d.crossings}
    label_arc: Dict[int, int] = {}
    generator_component: Dict[int, int] = {}
    base_meridian: Dict[int, int] = {}
    arc = 0
    for component, span in enumerate(d.ranges, start=1):
        if span is None:
            arc += 1
            generator_component[arc] = component
            base_meridian[component] = arc
            continue
        starts = [label for label in range(span[0], span[1] + 1) if label in under_out]
        if not starts:
            starts = [span[0]]
        elif starts[0] != span[0]:
            # The arc through the lowest label wraps around from the last start.
            starts = starts[-1:] + starts[:-1]
        base_meridian[component] = arc + 1
        for start in starts:
            arc += 1
            generator_component[arc] = component
            label = start
            while True:
                label_arc[label] = arc
                label = d.successor(label)
                if label in under_out or label == start:
                    break

    relations = tuple(
        WirtingerRelation(
            incoming=label_arc[crossing.under_in],
            over=label_arc[crossing.over_in],
            outgoing=label_arc[crossing.under_out],
            sign=crossing.sign,
            crossing=crossing.index,
        )
        for crossing in d.crossings
    )
    traversals = {
        component: tuple(index for index, is_under in _passages(d, component) if is_under)
        for component in range(1, d.n_components + 1)
    }
    return WirtingerPresentation(
        n_components=d.n_components,
        n_arcs=arc,
        generator_component=generator_component,
        relations=relations,
        base_meridian=base_meridian,
        traversals=traversals,
    )


def presentation_longitude(p: WirtingerPresentation, component: int) -> LongitudeWord:
    """Read the 0-framed longitude of ``component`` in arc generators."""
    letters: List[int] = []
    self_writhe = 0
    for index in p.traversals[component]:
        relation = p.relations[index]
        letters.append(relation.over if relation.sign > 0 else -relation.over)
        if p.generator_component[relation.over] == component:
            self_writhe += relation.sign
    base = p.base_meridian[component]
    letters.reverse()
    letters.extend([-base if self_writhe > 0 else base] * abs(self_writhe))
    return LongitudeWord(component=component, word=Word(tuple(letters)), base_arc=base)


def longitude_word(d: LinkDiagram, component: int) -> LongitudeWord:
    d.check_component(component)
    return presentation_longitude(wirtinger(d), component)


# --------------------------------------------------------------------------- surgery on diagrams


def sublink(d: LinkDiagram, components: Sequence[int]) -> LinkDiagram:
    """Keep ``components`` (in the given order), deleting every other component.

    Edges that ran through a deleted crossing are merged and all labels are
    renumbered; a kept component left without crossings becomes crossingless.
    """
    for component in components:
        d.check_component(component)
    if len(set(components)) != len(components):
        raise DiagramError("a component is listed twice", "components")
    kept = set(components)
    by_index = {crossing.index: crossing for crossing in d.crossings}
    live = {
        crossing.index
        for crossing in d.crossings
        if d.component_of(crossing.under_in) in kept and d.component_of(crossing.over_in) in kept
    }

    under_labels: Dict[int, Tuple[int, int]] = {}
    over_labels: Dict[int, Tuple[int, int]] = {}
    ranges: List[Range] = []
    next_label = 1
    for component in components:
        passages = [(index, under) for index, under in _passages(d, component) if index in live]
        if not passages:
            ranges.append(None)
            continue
        first = next_label
        count = len(passages)
        for k, (index, under) in enumerate(passages):
            enters = first + k
            leaves = first + (k + 1) % count
            (under_labels if under else over_labels)[index] = (enters, leaves)
        next_label += count
        ranges.append((first, next_label - 1))

    crossings = []
    for position, index in enumerate(sorted(live)):
        sign = by_index[index].sign
        a, c = under_labels[index]
        enters, leaves = over_labels[index]
        b, dd = (enters, leaves) if sign > 0 else (leaves, enters)
        crossings.append(Crossing(index=position, labels=(a, b, c, dd), sign=sign))
    name = f"{d.name}[{','.join(map(str, components))}]" if d.name else ""
    return LinkDiagram(name=name, crossings=tuple(crossings), ranges=tuple(ranges))


def reorder(d: LinkDiagram, order: Sequence[int]) -> LinkDiagram:
    if sorted(order) != list(range(1, d.n_components + 1)):
        raise DiagramError("order must be a permutation of the components", "components")
    reordered = sublink(d, order)
    return LinkDiagram(name=d.name, crossings=reordered.crossings, ranges=reordered.ranges)
