"""Milnor numbers of links given by longitude words.

A :class:`LinkPresentation` lists, for each component ``j``, a zero-framed
longitude written in the meridians ``m_i``.  For a multi-index
``I = h_1 ... h_{m-1} j`` the Milnor number ``mu(I)`` is the coefficient of
``X_{h_1} ... X_{h_{m-1}}`` in the Magnus expansion of the ``j``-th
longitude; ``mubar(I)`` is that number reduced modulo the indeterminacy
``Delta(I)``, the gcd of ``mu`` over cyclic permutations of proper
subsequences of ``I`` (of length >= 2).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .magnus import magnus_coefficient
from .words import Word, parse_word

MultiIndex = Tuple[int, ...]


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class LinkPresentation:
    """Longitude words per component.

    ``component_ids`` is ``1..n``, or ``0..n`` when ``has_component_zero``;
    in the latter case ``n`` counts only the components ``1..n``.  The
    ``trivial_rest_asserted`` flag records the user's claim that the link
    minus component 0 is trivial; it is not checked.
    """

    longitudes: Tuple[Word, ...]
    has_component_zero: bool = False
    trivial_rest_asserted: bool = False

    def __post_init__(self):
        ids = set(self.component_ids)
        for cid, w in zip(self.component_ids, self.longitudes):
            bad = w.generators() - ids
            if bad:
                raise PresentationError(
                    f"longitude of component {cid} uses undeclared generator(s) "
                    + ", ".join(f"m{i}" for i in sorted(bad))
                )
        if not self.longitudes or (self.has_component_zero and len(self.longitudes) < 2):
            raise PresentationError("a presentation needs at least one component")

    @classmethod
    def from_strings(cls, longitudes: Sequence[str], has_component_zero: bool = False,
                     trivial_rest_asserted: bool = False) -> "LinkPresentation":
        return cls(tuple(parse_word(t) for t in longitudes), has_component_zero, trivial_rest_asserted)

    @property
    def n(self) -> int:
        return len(self.longitudes) - (1 if self.has_component_zero else 0)

    @property
    def component_ids(self) -> Tuple[int, ...]:
        start = 0 if self.has_component_zero else 1
        return tuple(range(start, start + len(self.longitudes)))

    def longitude(self, cid: int) -> Word:
        ids = self.component_ids
        if cid not in ids:
            raise PresentationError(f"unknown component id {cid}")
        return self.longitudes[cid - ids[0]]

    def to_dict(self) -> dict:
        return {
            "components": self.n,
            "has_component_zero": self.has_component_zero,
            "trivial_rest_asserted": self.trivial_rest_asserted,
            "longitudes": [str(w) for w in self.longitudes],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LinkPresentation":
        try:
            n = int(data["components"])
            words = data["longitudes"]
        except (KeyError, TypeError, ValueError) as exc:
            raise PresentationError(f"link file needs 'components' and 'longitudes': {exc}") from None
        zero = bool(data.get("has_component_zero", False))
        if len(words) != n + (1 if zero else 0):
            raise PresentationError(
                f"expected {n + (1 if zero else 0)} longitudes for {n} components"
                + (" plus component 0" if zero else "") + f", got {len(words)}"
            )
        return cls.from_strings(words, zero, bool(data.get("trivial_rest_asserted", False)))


@dataclass(frozen=True)
class Residue:
    """An integer modulo ``modulus``; modulus 0 means an exact integer."""

    value: int
    modulus: int = 0

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError("modulus must be nonnegative")
        if self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    @property
    def symmetric(self) -> int:
        """Least absolute representative."""
        if not self.modulus:
            return self.value
        v = self.value
        return v - self.modulus if 2 * v > self.modulus else v

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"


def parse_index(text: str) -> MultiIndex:
    """``"1122"`` -> ``(1, 1, 2, 2)``; component ids are single digits here."""
    text = text.strip()
    if not text or not text.isdigit():
        raise ValueError(f"multi-index must be a nonempty digit string, got {text!r}")
    return tuple(int(c) for c in text)


def format_index(I: Sequence[int]) -> str:
    if all(0 <= i <= 9 for i in I):
        return "".join(str(i) for i in I)
    return ",".join(str(i) for i in I)


def r(I: Sequence[int]) -> int:
    """Largest multiplicity of any entry."""
    if not I:
        raise ValueError("empty multi-index")
    return max(Counter(I).values())


def pq_index(p: int, q: int) -> MultiIndex:
    """``[p, q]``: 1 repeated p times followed by 2 repeated q times."""
    return (1,) * p + (2,) * q


def _check(L: LinkPresentation, I: Sequence[int]):
    if len(I) < 2:
        raise ValueError("Milnor numbers need |I| >= 2")
    ids = L.component_ids
    for i in I:
        if i not in ids:
            raise PresentationError(f"unknown component id {i} in multi-index")


@lru_cache(maxsize=1 << 16)
def _mu_cached(L: LinkPresentation, I: MultiIndex) -> int:
    return magnus_coefficient(L.longitude(I[-1]), I[:-1])


def mu(L: LinkPresentation, I: Sequence[int]) -> int:
    I = tuple(I)
    _check(L, I)
    return _mu_cached(L, I)


def _reduced_indices(I: MultiIndex):
    """Cyclic permutations of proper subsequences of I with length >= 2."""
    m = len(I)
    seen = set()
    for keep in range(2, m):
        for pos in itertools.combinations(range(m), keep):
            J = tuple(I[p] for p in pos)
            for c in range(keep):
                Jc = J[c:] + J[:c]
                if Jc not in seen:
                    seen.add(Jc)
                    yield Jc


def delta(L: LinkPresentation, I: Sequence[int]) -> int:
    I = tuple(I)
    _check(L, I)
    g = 0
    for J in _reduced_indices(I):
        g = gcd(g, _mu_cached(L, J))
        if g == 1:
            break
    return g


def mubar(L: LinkPresentation, I: Sequence[int]) -> Residue:
    I = tuple(I)
    return Residue(mu(L, I), delta(L, I))


def enumerate_indices(ids: Sequence[int], maxlen: int, minlen: int = 2,
                      where: Optional[Callable[[MultiIndex], bool]] = None) -> Iterable[MultiIndex]:
    """Multi-indices over ``ids`` by increasing length, lexicographic within a length."""
    ids = sorted(ids)
    for m in range(minlen, maxlen + 1):
        for I in itertools.product(ids, repeat=m):
            if where is None or where(I):
                yield I


def mu_table(L: LinkPresentation, maxlen: int,
             where: Optional[Callable[[MultiIndex], bool]] = None) -> List[Tuple[MultiIndex, Residue]]:
    if maxlen < 2:
        raise ValueError("maxlen must be >= 2")
    return [(I, mubar(L, I)) for I in enumerate_indices(L.component_ids, maxlen, where=where)]


def linking_number(L: LinkPresentation, i: int, j: int) -> int:
    """Exponent sum of ``m_i`` in the longitude of ``j``."""
    return L.longitude(j).exponent_sum(i)


# Common filters for mu_table.
def r_at_most(k: int) -> Callable[[MultiIndex], bool]:
    return lambda I: r(I) <= k


def ends_with(j: int) -> Callable[[MultiIndex], bool]:
    return lambda I: I[-1] == j
