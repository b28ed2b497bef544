"""Word algebra in finitely generated free groups.

A letter is a non-zero integer: ``i`` stands for the generator x_i and ``-i``
for its inverse. Generator indices are 1-based. Words are freely reduced when
constructed, so two words are equal exactly when their letter tuples are.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import GeneratorRangeError, WordSyntaxError

_TOKEN = re.compile(r"x(\d+)(?:\^([+-]?\d+))?$")


def _reduce_into(stack: List[int], letters: Iterable[int]) -> List[int]:
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return stack


@dataclass(frozen=True)
class Word:
    letters: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for letter in self.letters:
            if isinstance(letter, bool) or not isinstance(letter, int) or letter == 0:
                raise ValueError(f"invalid letter {letter!r}; letters are non-zero integers")
        object.__setattr__(self, "letters", tuple(_reduce_into([], self.letters)))

    @classmethod
    def _trusted(cls, letters: Sequence[int]) -> "Word":
        # Caller guarantees the letters are already freely reduced.
        word = object.__new__(cls)
        object.__setattr__(word, "letters", tuple(letters))
        return word

    @classmethod
    def identity(cls) -> "Word":
        return cls._trusted(())

    @classmethod
    def generator(cls, index: int, sign: int = 1) -> "Word":
        if index < 1:
            raise ValueError("generator indices start at 1")
        return cls._trusted((index if sign > 0 else -index,))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, exponent: int) -> "Word":
        return power(self, exponent)

    def __str__(self) -> str:
        return format_word(self) or "1"

    def is_identity(self) -> bool:
        return not self.letters

    @property
    def max_index(self) -> int:
        return max((abs(letter) for letter in self.letters), default=0)

    def syllables(self) -> List[Tuple[int, int]]:
        """Runs of equal letters as (generator, exponent) pairs."""
        runs: List[Tuple[int, int]] = []
        for letter in self.letters:
            generator, sign = abs(letter), (1 if letter > 0 else -1)
            if runs and runs[-1][0] == generator and (runs[-1][1] > 0) == (sign > 0):
                runs[-1] = (generator, runs[-1][1] + sign)
            else:
                runs.append((generator, sign))
        return runs

    def substitute(self, images: Mapping[int, "Word"]) -> "Word":
        """Apply the homomorphism sending x_i to ``images[i]``."""
        stack: List[int] = []
        inverses: dict[int, Tuple[int, ...]] = {}
        for letter in self.letters:
            generator = abs(letter)
            if letter > 0:
                _reduce_into(stack, images[generator].letters)
            else:
                if generator not in inverses:
                    inverses[generator] = tuple(-x for x in reversed(images[generator].letters))
                _reduce_into(stack, inverses[generator])
        return Word._trusted(stack)


def reduce(letters: Iterable[int]) -> Word:
    return Word(tuple(letters))


def multiply(u: Word, v: Word) -> Word:
    left, right = u.letters, v.letters
    cancel = 0
    limit = min(len(left), len(right))
    while cancel < limit and left[len(left) - 1 - cancel] == -right[cancel]:
        cancel += 1
    return Word._trusted(left[: len(left) - cancel] + right[cancel:])


def invert(w: Word) -> Word:
    return Word._trusted(tuple(-letter for letter in reversed(w.letters)))


def power(w: Word, exponent: int) -> Word:
    if exponent < 0:
        return power(invert(w), -exponent)
    stack: List[int] = []
    for _ in range(exponent):
        _reduce_into(stack, w.letters)
    return Word._trusted(stack)


def commutator(u: Word, v: Word) -> Word:
    stack: List[int] = []
    for part in (u, v, invert(u), invert(v)):
        _reduce_into(stack, part.letters)
    return Word._trusted(stack)


def conjugate(w: Word, by: Word) -> Word:
    stack: List[int] = []
    for part in (by, w, invert(by)):
        _reduce_into(stack, part.letters)
    return Word._trusted(stack)


def exponent_sums(w: Word, n_generators: int) -> Tuple[int, ...]:
    sums = [0] * n_generators
    for letter in w.letters:
        index = abs(letter)
        if index > n_generators:
            raise GeneratorRangeError(index, n_generators)
        sums[index - 1] += 1 if letter > 0 else -1
    return tuple(sums)


def is_conjugate_of_generator(w: Word) -> Optional[int]:
    """Return i when w = v x_i v^-1 for some word v, else None."""
    letters = w.letters
    lo, hi = 0, len(letters) - 1
    while hi - lo >= 1 and letters[lo] == -letters[hi]:
        lo += 1
        hi -= 1
    if hi == lo and letters[lo] > 0:
        return letters[lo]
    return None


def parse_word(text: str, n_generators: int) -> Word:
    """Parse ``"x1 x2^-1 x3^2"`` style text; the empty string is the identity."""
    letters: List[int] = []
    for match in re.finditer(r"\S+", text):
        token = match.group(0)
        parsed = _TOKEN.match(token)
        if parsed is None:
            raise WordSyntaxError(f"unrecognised token {token!r}", match.start())
        index = int(parsed.group(1))
        if index < 1:
            raise WordSyntaxError("generator indices start at 1", match.start())
        if index > n_generators:
            raise GeneratorRangeError(index, n_generators)
        exponent = int(parsed.group(2)) if parsed.group(2) is not None else 1
        letter = index if exponent > 0 else -index
        letters.extend([letter] * abs(exponent))
    return reduce(letters)


def format_word(w: Word) -> str:
    parts = []
    for generator, exponent in w.syllables():
        parts.append(f"x{generator}" if exponent == 1 else f"x{generator}^{exponent}")
    return " ".join(parts)
