"""Rewrite arc generators and longitudes in the base meridians, modulo F_q.

Level 1 sends every arc to its component's base meridian. Each further level
walks every component from its base arc and rebuilds the arc images through
the Wirtinger relations using the previous level's images of the over-arcs.
After q - 1 rounds the images are correct in G/G_q.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple

from .config import Guards
from .diagram import LongitudeWord, WirtingerPresentation, presentation_longitude
from .errors import DegreeError, ResourceGuardError
from .freegroup import Word, conjugate, power
from .magnus import (
    TruncatedSeries,
    generator_series,
    min_nonzero_weight,
    series_multiply,
    series_one,
)

LOGGER = logging.getLogger("milnorkit.chen_milnor")


@dataclass(frozen=True)
class MeridianExpansion:
    level: int
    per_arc: Mapping[int, Word]

    def total_letters(self) -> int:
        return sum(len(word) for word in self.per_arc.values())


def _initial_images(p: WirtingerPresentation) -> Dict[int, Word]:
    return {arc: Word.generator(component) for arc, component in p.generator_component.items()}


def _check_letters(images: Mapping[int, Word], guards: Guards) -> None:
    observed = sum(len(word) for word in images.values())
    if observed > guards.max_letters:
        raise ResourceGuardError("letters", guards.max_letters, observed)


def expand_to_level(
    p: WirtingerPresentation, q: int, guards: Optional[Guards] = None
) -> MeridianExpansion:
    if q < 1:
        raise DegreeError("expansion level must be at least 1")
    guards = guards or Guards()
    images = _initial_images(p)
    for level in range(2, q + 1):
        updated: Dict[int, Word] = {}
        for component in range(1, p.n_components + 1):
            current = p.base_meridian[component]
            updated[current] = Word.generator(component)
            for index in p.traversals[component]:
                relation = p.relations[index]
                if relation.outgoing == p.base_meridian[component]:
                    break
                over = power(images[relation.over], relation.sign)
                updated[relation.outgoing] = conjugate(updated[relation.incoming], over)
        images = updated
        _check_letters(images, guards)
        LOGGER.info(
            "expansion level %d: %d arcs, %d letters",
            level,
            len(images),
            sum(len(word) for word in images.values()),
        )
    return MeridianExpansion(level=q, per_arc=images)


def reduce_longitude(
    p: WirtingerPresentation,
    longitude: LongitudeWord,
    q: int,
    guards: Optional[Guards] = None,
) -> Word:
    if q < 2:
        raise DegreeError("longitudes are reduced at level 2 or higher")
    guards = guards or Guards()
    expansion = expand_to_level(p, q, guards)
    reduced = longitude.word.substitute(expansion.per_arc)
    if len(reduced) > guards.max_letters:
        raise ResourceGuardError("letters", guards.max_letters, len(reduced))
    return reduced


# --------------------------------------------------------------------------- series form

SeriesPair = Tuple[TruncatedSeries, TruncatedSeries]


def _guarded_product(a: TruncatedSeries, b: TruncatedSeries, guards: Guards) -> TruncatedSeries:
    product = series_multiply(a, b)
    if len(product) > guards.max_terms:
        raise ResourceGuardError("terms", guards.max_terms, len(product))
    return product


def _conjugate_pair(target: SeriesPair, by: SeriesPair, sign: int, guards: Guards) -> SeriesPair:
    left, right = (by[0], by[1]) if sign > 0 else (by[1], by[0])
    image = _guarded_product(_guarded_product(left, target[0], guards), right, guards)
    inverse = _guarded_product(_guarded_product(left, target[1], guards), right, guards)
    return image, inverse


def expand_series_to_level(
    p: WirtingerPresentation, q: int, degree_cap: int, guards: Optional[Guards] = None
) -> Dict[int, SeriesPair]:
    """Magnus images (and their inverses) of every arc at level ``q``."""
    if q < 1:
        raise DegreeError("expansion level must be at least 1")
    guards = guards or Guards()
    n = p.n_components
    meridians = {
        component: (
            generator_series(component, n, degree_cap),
            generator_series(-component, n, degree_cap),
        )
        for component in range(1, n + 1)
    }
    images = {arc: meridians[component] for arc, component in p.generator_component.items()}
    for level in range(2, q + 1):
        updated: Dict[int, SeriesPair] = {}
        for component in range(1, n + 1):
            updated[p.base_meridian[component]] = meridians[component]
            for index in p.traversals[component]:
                relation = p.relations[index]
                if relation.outgoing == p.base_meridian[component]:
                    break
                updated[relation.outgoing] = _conjugate_pair(
                    updated[relation.incoming], images[relation.over], relation.sign, guards
                )
        images = updated
        LOGGER.info(
            "series level %d: %d terms across %d arcs",
            level,
            sum(len(pair[0]) for pair in images.values()),
            len(images),
        )
        for arc, pair in images.items():
            LOGGER.debug("arc %d at level %d: %d terms", arc, level, len(pair[0]))
    return images


def longitude_series(
    p: WirtingerPresentation,
    component: int,
    q: int,
    guards: Optional[Guards] = None,
) -> TruncatedSeries:
    """Magnus expansion, through weight q - 1, of the reduced longitude at level ``q``.

    Agrees with ``magnus_expand(reduce_longitude(...), q - 1)`` but never builds
    the long meridian words.
    """
    if q < 2:
        raise DegreeError("longitudes are reduced at level 2 or higher")
    guards = guards or Guards()
    images = expand_series_to_level(p, q, q - 1, guards)
    longitude = presentation_longitude(p, component)
    result = series_one(p.n_components, q - 1)
    for letter in longitude.word.letters:
        pair = images[abs(letter)]
        result = _guarded_product(result, pair[0] if letter > 0 else pair[1], guards)
    return result


def knot_longitude_depth(
    p: WirtingerPresentation, component: int, cap: int, guards: Optional[Guards] = None
) -> Optional[int]:
    """Smallest weight carrying a nonzero coefficient of the longitude, up to ``cap``."""
    if cap < 1:
        raise DegreeError("depth cap must be at least 1")
    return min_nonzero_weight(longitude_series(p, component, cap + 1, guards))
