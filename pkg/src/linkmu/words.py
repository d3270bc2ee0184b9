"""Free-group words over indexed meridian generators.

A word is stored in syllable form: a tuple of ``(index, exponent)`` pairs
with adjacent indices distinct and no zero exponents.  Every constructor
goes through :func:`reduce_syllables`, so two words are equal exactly when
they represent the same element of the free group.

Text format is whitespace separated ``m<index>`` / ``m<index>^<int>`` tokens::

    >>> parse_word("m1 m2 m2^-1 m1")
    Word('m1^2')
    >>> str(parse_word("m2 m1^-1 m2^-1 m1"))
    'm2 m1^-1 m2^-1 m1'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

Letter = Tuple[int, int]

_TOKEN = re.compile(r"m(\d+)(?:\^([+-]?\d+))?\Z")


class WordParseError(ValueError):
    """Raised for a malformed word token; ``position`` is 0-based."""

    def __init__(self, message: str, position: int, token: str):
        super().__init__(f"token {position} ({token!r}): {message}")
        self.position = position
        self.token = token


def reduce_syllables(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    """Freely reduce a sequence of ``(index, exponent)`` letters.

    Uses a stack, so cancellations cascade: ``m1 m2 m2^-1 m1^-1`` vanishes.
    """
    stack: list[list[int]] = []
    for index, exponent in letters:
        if exponent == 0:
            continue
        if stack and stack[-1][0] == index:
            stack[-1][1] += exponent
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([index, exponent])
    return tuple((i, e) for i, e in stack)


@dataclass(frozen=True)
class Word:
    """Freely reduced word; use :meth:`from_letters` or :func:`parse_word`."""

    syllables: Tuple[Letter, ...] = ()

    def __post_init__(self):
        for index, exponent in self.syllables:
            if index < 0:
                raise ValueError(f"negative generator index {index}")
            if exponent == 0:
                raise ValueError("zero exponent in reduced word")
        for (a, _), (b, _) in zip(self.syllables, self.syllables[1:]):
            if a == b:
                raise ValueError("adjacent syllables share an index; word is not reduced")

    @classmethod
    def from_letters(cls, letters: Iterable[Letter]) -> "Word":
        return cls(reduce_syllables(letters))

    @classmethod
    def generator(cls, index: int, exponent: int = 1) -> "Word":
        return cls.from_letters([(index, exponent)])

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.syllables)

    def __len__(self) -> int:
        """Syllable count."""
        return len(self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return invert(self) ** -n
        out = Word()
        for _ in range(n):
            out = out * self
        return out

    @property
    def letter_length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def generators(self) -> frozenset:
        return frozenset(i for i, _ in self.syllables)

    def exponent_sum(self, index: int) -> int:
        return sum(e for i, e in self.syllables if i == index)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


def format_word(w: Word) -> str:
    """Canonical token text; the identity renders as the empty string."""
    return " ".join(f"m{i}" if e == 1 else f"m{i}^{e}" for i, e in w.syllables)


def parse_word(text: str) -> Word:
    letters = []
    for position, token in enumerate(text.split()):
        match = _TOKEN.match(token)
        if match is None:
            raise WordParseError("expected m<index> or m<index>^<int>", position, token)
        exponent = int(match.group(2)) if match.group(2) is not None else 1
        if exponent == 0:
            raise WordParseError("zero exponent", position, token)
        letters.append((int(match.group(1)), exponent))
    return Word.from_letters(letters)


def multiply(u: Word, v: Word) -> Word:
    return Word.from_letters(u.syllables + v.syllables)


def invert(u: Word) -> Word:
    return Word(tuple((i, -e) for i, e in reversed(u.syllables)))


def commutator(u: Word, v: Word) -> Word:
    """``[u, v] = u v u^-1 v^-1``."""
    return u * v * invert(u) * invert(v)


def erase_generator(u: Word, g: int) -> Word:
    """Image of ``u`` under the homomorphism ``m_g -> 1`` fixing the other generators."""
    return Word.from_letters((i, e) for i, e in u.syllables if i != g)


def is_trivial(u: Word) -> bool:
    # Words are kept reduced, and free reduction solves the word problem.
    return not u.syllables
