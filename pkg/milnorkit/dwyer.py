"""Dwyer numbers of null-homologous knots in connected sums of S^1 x S^2.

A knot K in #^l S^1 x S^2 is presented as a link (K, U_1, ..., U_l) in S^3 with
0-surgery on the unlink U. When every mu-bar of the link below weight q
vanishes and some weight-q invariant does not, D(K) = q; the 0-framed
longitude of K then lies in G_(q-1) but not G_q, and the first non-vanishing
Massey products of the surgered manifold have weight q.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .chen_milnor import knot_longitude_depth
from .config import Guards
from .diagram import (
    LinkDiagram,
    linking_number,
    parse_pd,
    read_document,
    reorder,
    sublink,
    wirtinger,
)
from .errors import ComputationError, DiagramError, HypothesisError
from .fixtures import FAMILY_FILES, load_bundled_document
from .magnus import MultiIndex
from .milnor import first_nonvanishing

LOGGER = logging.getLogger("milnorkit.dwyer")

MIN_DWYER = 3


@dataclass(frozen=True)
class SurgeryPresentation:
    diagram: LinkDiagram
    surgered: Tuple[int, ...]
    framings: Tuple[int, ...]
    unlink_assertion: bool
    knot_component: int = 1

    @property
    def n_surgered(self) -> int:
        return len(self.surgered)


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class SurgeryValidation:
    checks: Tuple[HypothesisCheck, ...]

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[str]:
        return [
            f"{check.name}: {check.detail}" if check.detail else check.name
            for check in self.checks
            if not check.passed
        ]


@dataclass(frozen=True)
class DwyerReport:
    link: str
    cap_used: int
    dwyer_number: Optional[int]
    # Set only when nothing non-vanishing was found up to the cap.
    lower_bound: Optional[int] = None
    witness: List[MultiIndex] = field(default_factory=list)
    massey_weight: Optional[int] = None
    cross_checked: Optional[bool] = None

    @property
    def longitude_depth(self) -> str:
        if self.dwyer_number is None:
            return f"longitude in G_{self.cap_used}"
        q = self.dwyer_number
        return f"longitude in G_{q - 1} \\ G_{q}"

    def describe(self) -> str:
        if self.dwyer_number is None:
            return (
                f"D(K) >= {self.lower_bound}; no non-vanishing invariant up to weight "
                f"{self.cap_used}"
            )
        return (
            f"D(K) = {self.dwyer_number}; {self.longitude_depth}; "
            f"first Massey weight {self.massey_weight}"
        )


# --------------------------------------------------------------------------- input


def _int_list(raw: Any, location: str) -> Tuple[int, ...]:
    if not isinstance(raw, list) or any(
        isinstance(v, bool) or not isinstance(v, int) for v in raw
    ):
        raise DiagramError("expected a list of integers", location)
    return tuple(raw)


def parse_surgery(document: Union[str, Mapping[str, Any]]) -> SurgeryPresentation:
    if isinstance(document, str):
        document = read_document(document)
    diagram = parse_pd(document)
    n = diagram.n_components
    knot = document.get("knot_component", 1)
    if knot != 1:
        raise DiagramError("the knot must be component 1", "knot_component")
    surgered = _int_list(document.get("surgered", list(range(2, n + 1))), "surgered")
    if sorted(surgered) != list(range(2, n + 1)):
        raise DiagramError(f"surgered components must be 2..{n}", "surgered")
    framings = _int_list(document.get("framings", [0] * len(surgered)), "framings")
    if len(framings) != len(surgered):
        raise DiagramError("one framing per surgered component", "framings")
    assertion = document.get("unlink_assertion", False)
    if not isinstance(assertion, bool):
        raise DiagramError("must be true or false", "unlink_assertion")
    return SurgeryPresentation(
        diagram=diagram,
        surgered=surgered,
        framings=framings,
        unlink_assertion=assertion,
    )


def load_surgery(source: str) -> SurgeryPresentation:
    return parse_surgery(read_document(source))


def family_k(i: int) -> SurgeryPresentation:
    """Surgery presentation of the i-th knot of the doubled family, D = 2i + 2."""
    if i not in FAMILY_FILES:
        raise ValueError(f"family member {i} is not bundled (have 1..{max(FAMILY_FILES)})")
    return parse_surgery(load_bundled_document(FAMILY_FILES[i]))


# --------------------------------------------------------------------------- hypotheses


def validate_surgery(
    s: SurgeryPresentation,
    weight_cap: int,
    guards: Optional[Guards] = None,
    strict: bool = True,
) -> SurgeryValidation:
    """Check the necessary conditions for the Milnor-invariant computation of D(K).

    With ``strict`` a failed check raises HypothesisError naming every failure.
    """
    d = s.diagram
    checks: List[HypothesisCheck] = [
        HypothesisCheck(
            "at least one surgered component",
            d.n_components >= 2,
            f"diagram has {d.n_components} component(s)",
        ),
        HypothesisCheck(
            "surgery framings are 0",
            all(framing == 0 for framing in s.framings),
            f"framings {list(s.framings)}",
        ),
        HypothesisCheck(
            "surgered sublink asserted to be an unlink",
            s.unlink_assertion,
            "set unlink_assertion to true once the sublink is known to be trivial",
        ),
    ]
    for u in s.surgered:
        lk = linking_number(d, s.knot_component, u)
        checks.append(HypothesisCheck(f"lk(K, U{u - 1}) = 0", lk == 0, f"lk = {lk}"))
    for position, u in enumerate(s.surgered):
        for v in s.surgered[position + 1 :]:
            lk = linking_number(d, u, v)
            checks.append(
                HypothesisCheck(f"lk(U{u - 1}, U{v - 1}) = 0", lk == 0, f"lk = {lk}")
            )
    if len(s.surgered) >= 2:
        weight, witnesses = first_nonvanishing(sublink(d, s.surgered), weight_cap, guards)
        checks.append(
            HypothesisCheck(
                f"surgered sublink has vanishing mu-bar up to weight {weight_cap}",
                weight is None,
                f"non-vanishing at weight {weight}: {witnesses}" if weight else "",
            )
        )
    validation = SurgeryValidation(tuple(checks))
    for check in validation.checks:
        LOGGER.debug("hypothesis %r: %s", check.name, "ok" if check.passed else "FAILED")
    if strict and not validation.ok:
        raise HypothesisError(validation.failures)
    return validation


# --------------------------------------------------------------------------- D(K)


def dwyer_number(
    s: SurgeryPresentation,
    weight_cap: int,
    guards: Optional[Guards] = None,
    cross_check: bool = False,
) -> DwyerReport:
    validate_surgery(s, weight_cap, guards)
    d = s.diagram
    weight, witnesses = first_nonvanishing(d, weight_cap, guards)
    if weight is None:
        bound = max(MIN_DWYER, weight_cap + 1)
        LOGGER.warning(
            "no non-vanishing invariant of %r up to weight %d; only D >= %d",
            d.name,
            weight_cap,
            bound,
        )
        return DwyerReport(link=d.name, cap_used=weight_cap, dwyer_number=None, lower_bound=bound)
    if weight < MIN_DWYER:
        raise ComputationError(f"weight-{weight} invariant survived the linking checks")

    checked: Optional[bool] = None
    if cross_check:
        depth = knot_longitude_depth(wirtinger(d), s.knot_component, weight - 1, guards)
        if depth != weight - 1:
            raise ComputationError(
                f"knot longitude depth {depth} disagrees with first weight {weight}"
            )
        checked = True
    LOGGER.info("D(%s) = %d, witnesses %s", d.name or "K", weight, witnesses)
    return DwyerReport(
        link=d.name,
        cap_used=weight_cap,
        dwyer_number=weight,
        witness=witnesses,
        massey_weight=weight,
        cross_checked=checked,
    )


def report_to_document(r: DwyerReport) -> Dict[str, Any]:
    return {
        "link": r.link,
        "dwyer_number": r.dwyer_number,
        "lower_bound": r.lower_bound,
        "witness": [list(index) for index in r.witness],
        "longitude_depth": r.longitude_depth,
        "massey_weight": r.massey_weight,
        "cap_used": r.cap_used,
        "cross_checked": r.cross_checked,
    }


# --------------------------------------------------------------------------- bounds


def knotification_bound(n_components: int, first_weight: int) -> int:
    """Lower bound ceil((q - 1) / n) on D of the knotified n-component link."""
    if n_components < 1:
        raise ValueError("a link has at least one component")
    if first_weight < 2:
        raise ValueError("first non-vanishing weight is at least 2")
    return -(-(first_weight - 1) // n_components)


def band_sum_bound(first_weight: int, k_bands: int) -> int:
    """floor(r / (k + 1)); the banded link's first weight is strictly greater."""
    if first_weight < 2:
        raise ValueError("first non-vanishing weight is at least 2")
    if k_bands < 1:
        raise ValueError("at least one band")
    return first_weight // (k_bands + 1)


def knotified_link_weight(r: int) -> int:
    """Least possible first weight of the banded link, given the strict bound ``r``."""
    if r < 1:
        raise ValueError("bound must be positive")
    return r + 1


def knotification_bound_from_link(
    d: LinkDiagram, weight_cap: int, guards: Optional[Guards] = None
) -> Optional[int]:
    weight, _ = first_nonvanishing(d, weight_cap, guards)
    if weight is None:
        return None
    return knotification_bound(d.n_components, weight)


def surgered_order(s: SurgeryPresentation, order: Sequence[int]) -> SurgeryPresentation:
    """Same presentation with the surgered components listed in ``order``."""
    if sorted(order) != sorted(s.surgered):
        raise ValueError("order must permute the surgered components")
    permuted = reorder(s.diagram, [s.knot_component, *order])
    return SurgeryPresentation(
        diagram=permuted,
        surgered=tuple(range(2, permuted.n_components + 1)),
        framings=s.framings,
        unlink_assertion=s.unlink_assertion,
    )
