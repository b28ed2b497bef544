"""Slow, independent checkers for the series, membership and longitude kernels.

Nothing here calls into the main kernels; only the Word and TruncatedSeries
types are shared.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .diagram import WirtingerPresentation
from .errors import ResourceGuardError
from .freegroup import Word
from .magnus import MultiIndex, TruncatedSeries

MAX_COMMUTATOR_WEIGHT = 6
MAX_ORACLE_STEPS = 10
MAX_ORACLE_LETTERS = 2_000_000


def naive_series_multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Every term pair, truncated only afterwards."""
    if (a.n_vars, a.degree_cap) != (b.n_vars, b.degree_cap):
        raise ValueError("series shapes differ")
    full: Dict[MultiIndex, int] = {}
    for (left, lv), (right, rv) in itertools.product(
        a.coefficients.items(), b.coefficients.items()
    ):
        key = left + right
        full[key] = full.get(key, 0) + lv * rv
    kept = {key: value for key, value in full.items() if len(key) <= a.degree_cap and value}
    return TruncatedSeries(a.n_vars, a.degree_cap, kept)


def _letter_series(letter: int, n_vars: int, cap: int) -> TruncatedSeries:
    index = abs(letter)
    if letter > 0:
        return TruncatedSeries(n_vars, cap, {(): 1, (index,): 1})
    return TruncatedSeries(
        n_vars, cap, {(index,) * k: (-1) ** k for k in range(cap + 1)}
    )


def naive_magnus_expand(w: Word, n_vars: int, degree_cap: int) -> TruncatedSeries:
    result = TruncatedSeries(n_vars, degree_cap, {(): 1})
    for letter in w.letters:
        result = naive_series_multiply(result, _letter_series(letter, n_vars, degree_cap))
    return result


# --------------------------------------------------------------------------- commutators


def _bracket(u: Word, v: Word) -> Word:
    inverse_u = tuple(-x for x in reversed(u.letters))
    inverse_v = tuple(-x for x in reversed(v.letters))
    return Word(u.letters + v.letters + inverse_u + inverse_v)


@dataclass(frozen=True)
class BasicCommutatorSet:
    n_vars: int
    max_weight: int
    elements: List[Tuple[Word, int]] = field(default_factory=list)

    def of_weight(self, weight: int) -> List[Word]:
        return [word for word, k in self.elements if k == weight]


def generate_basic_commutators(n_vars: int, max_weight: int) -> BasicCommutatorSet:
    """Left-normed [x_i1, x_i2, ..., x_ik] for 2 <= k <= max_weight, i1 != i2.

    Each element of weight k lies in F_k and not in F_(k+1).
    """
    if max_weight > MAX_COMMUTATOR_WEIGHT:
        raise ResourceGuardError("commutator weight", MAX_COMMUTATOR_WEIGHT, max_weight)
    elements: List[Tuple[Word, int]] = []
    for weight in range(2, max_weight + 1):
        for indices in itertools.product(range(1, n_vars + 1), repeat=weight):
            if indices[0] == indices[1]:
                continue
            word = Word((indices[0],))
            for index in indices[1:]:
                word = _bracket(word, Word((index,)))
            elements.append((word, weight))
    return BasicCommutatorSet(n_vars=n_vars, max_weight=max_weight, elements=elements)


def oracle_in_lcs(construction_weight: int, q: int) -> bool:
    """Membership in F_q of an iterated commutator known to have the given weight."""
    return construction_weight >= q


# --------------------------------------------------------------------------- longitudes


def _conjugated(target: Word, by: Word, sign: int) -> Word:
    by_letters = by.letters if sign > 0 else tuple(-x for x in reversed(by.letters))
    by_inverse = tuple(-x for x in reversed(by_letters))
    return Word(by_letters + target.letters + by_inverse)


def oracle_longitude(p: WirtingerPresentation, component: int, max_steps: int) -> Word:
    """Longitude of ``component`` in base meridians after ``max_steps`` sweeps.

    Each sweep reassigns arcs in whatever order the relation list allows,
    always reading the freshest image of the over-arc. After s sweeps every
    image is correct modulo F_(s+1).
    """
    if max_steps > MAX_ORACLE_STEPS:
        raise ResourceGuardError("oracle steps", MAX_ORACLE_STEPS, max_steps)
    bases = {arc for arc in p.base_meridian.values()}
    images: Dict[int, Word] = {
        arc: Word((owner,)) for arc, owner in p.generator_component.items()
    }
    for _ in range(max_steps):
        assigned = set(bases)
        progress = True
        while progress:
            progress = False
            for relation in p.relations:
                if relation.incoming in assigned and relation.outgoing not in assigned:
                    images[relation.outgoing] = _conjugated(
                        images[relation.incoming], images[relation.over], relation.sign
                    )
                    assigned.add(relation.outgoing)
                    progress = True
        letters = sum(len(word) for word in images.values())
        if letters > MAX_ORACLE_LETTERS:
            raise ResourceGuardError("oracle letters", MAX_ORACLE_LETTERS, letters)

    base = p.base_meridian[component]
    following = {relation.incoming: relation for relation in p.relations}
    word: Tuple[int, ...] = ()
    self_writhe = 0
    arc = base
    while arc in following:
        relation = following[arc]
        factor = images[relation.over].letters
        if relation.sign < 0:
            factor = tuple(-x for x in reversed(factor))
        word = factor + word
        if p.generator_component[relation.over] == component:
            self_writhe += relation.sign
        arc = relation.outgoing
        if arc == base:
            break
    correction = (-component if self_writhe > 0 else component,) * abs(self_writhe)
    return Word(word + correction)
