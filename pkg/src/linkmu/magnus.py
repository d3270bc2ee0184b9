"""Truncated noncommutative power series and the Magnus expansion.

The Magnus map sends a generator ``m_i`` to ``1 + X_i`` and ``m_i^-1`` to
``1 - X_i + X_i^2 - ...``.  A :class:`Series` holds integer coefficients on
monomials ``X_{i1} ... X_{id}`` (tuples of indices) up to an explicit
truncation degree.  Series of different truncation degree never mix.

Two routes to a coefficient are provided on purpose:

* :func:`expand` builds the whole truncated series, and
* :func:`magnus_coefficient` reads off one monomial by dynamic programming
  over the word, without materialising the series.

The second is what Milnor-number lookups use; the first is used for
debugging, series identities and as a cross-check.
"""

from __future__ import annotations

from collections import defaultdict
from math import comb
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .words import Word, reduce_syllables

Monomial = Tuple[int, ...]


class TruncationMismatch(ValueError):
    pass


class Series:
    """Immutable truncated series: monomial -> nonzero int, all of degree <= ``degree``."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Monomial, int] = None):
        if degree < 0:
            raise ValueError("truncation degree must be nonnegative")
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) > degree:
                raise ValueError(f"monomial {mono} exceeds truncation degree {degree}")
            if c:
                clean[mono] = c
        self.degree = degree
        self._terms = clean

    @classmethod
    def one(cls, degree: int) -> "Series":
        return cls(degree, {(): 1})

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def is_one(self) -> bool:
        return self._terms == {(): 1}

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        return hash((self.degree, frozenset(self._terms.items())))

    def __mul__(self, other: "Series") -> "Series":
        return series_mul(self, other)

    def __len__(self):
        return len(self._terms)

    def __str__(self):
        return render_series(self)

    def __repr__(self):
        return f"Series(degree={self.degree}, {render_series(self)!r})"


def render_series(s: Series) -> str:
    """Graded-lexicographic debug text, e.g. ``1 + 2 X1 + 1 X1 X2 - 1 X2 X1``."""
    parts = []
    for mono, c in s.items():
        body = str(abs(c)) if not mono else f"{abs(c)} " + " ".join(f"X{i}" for i in mono)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def series_mul(a: Series, b: Series) -> Series:
    if a.degree != b.degree:
        raise TruncationMismatch(f"truncation degrees differ: {a.degree} vs {b.degree}")
    d = a.degree
    out: Dict[Monomial, int] = defaultdict(int)
    b_items = list(b._terms.items())
    for ma, ca in a._terms.items():
        room = d - len(ma)
        for mb, cb in b_items:
            if len(mb) <= room:
                out[ma + mb] += ca * cb
    return Series(d, out)


def power_coefficients(exponent: int, degree: int) -> list:
    """Coefficients of ``X^t`` in ``(1 + X)^exponent`` for ``t = 0..degree``."""
    if exponent >= 0:
        return [comb(exponent, t) for t in range(degree + 1)]
    n = -exponent
    return [(-1) ** t * comb(n + t - 1, t) for t in range(degree + 1)]


def _mul_by_letter(terms: Dict[Monomial, int], index: int, exponent: int, degree: int):
    coeffs = power_coefficients(exponent, degree)
    out: Dict[Monomial, int] = defaultdict(int)
    for mono, c in terms.items():
        for t in range(degree - len(mono) + 1):
            if coeffs[t]:
                out[mono + (index,) * t] += c * coeffs[t]
    return {m: c for m, c in out.items() if c}


def expand_letters(letters: Iterable[Tuple[int, int]], degree: int) -> Series:
    """Truncated product of letter expansions, with no free reduction first."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    terms: Dict[Monomial, int] = {(): 1}
    for index, exponent in letters:
        terms = _mul_by_letter(terms, index, exponent, degree)
    return Series(degree, terms)


def expand(w: Word, degree: int) -> Series:
    """Magnus expansion of ``w`` truncated above ``degree``."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    return expand_letters(w.syllables, degree)


def coefficient(s: Series, m: Sequence[int]) -> int:
    m = tuple(m)
    if len(m) > s.degree:
        raise TruncationMismatch(f"monomial of degree {len(m)} exceeds truncation {s.degree}")
    return s._terms.get(m, 0)


def substitute_zero(s: Series, g: int) -> Series:
    """Set ``X_g = 0``: drop every term whose monomial mentions ``g``."""
    return Series(s.degree, {m: c for m, c in s._terms.items() if g not in m})


def magnus_coefficient(w, monomial: Sequence[int]) -> int:
    """Coefficient of ``X_{h1}...X_{hm}`` in E(w), exact and untruncated.

    ``w`` may be a :class:`Word` or any iterable of ``(index, exponent)``
    letters.  Runs in O(letters * m^2) by tracking the coefficient of
    every prefix ``X_{h1}...X_{hj}``.
    """
    h = tuple(monomial)
    letters = w.syllables if isinstance(w, Word) else tuple(w)
    m = len(h)
    # run[j] = length of the constant run of h ending at position j (1-based)
    run = [0] * (m + 1)
    for j in range(1, m + 1):
        run[j] = run[j - 1] + 1 if j > 1 and h[j - 1] == h[j - 2] else 1
    dp = [1] + [0] * m
    for index, exponent in letters:
        coeffs = power_coefficients(exponent, m)
        new = dp[:]
        for j in range(1, m + 1):
            if h[j - 1] != index:
                continue
            acc = 0
            for t in range(1, run[j] + 1):
                if dp[j - t]:
                    acc += dp[j - t] * coeffs[t]
            new[j] = dp[j] + acc
        dp = new
    return dp[m]


def lowest_nonvanishing(letters: Sequence[Tuple[int, int]], max_degree: int, drop=()):
    """Lowest degree d <= max_degree where E(letters) - 1 has a nonzero term.

    Returns ``(d, {monomial: coeff})`` for the homogeneous degree-d part,
    or ``None`` when the series equals 1 through ``max_degree``.  Generators
    in ``drop`` are substituted by zero letter by letter, which is the same
    as substituting afterwards because the terms containing ``X_g`` form a
    two-sided ideal.
    """
    letters = [(i, e) for i, e in letters if i not in drop]
    for d in range(1, max_degree + 1):
        s = expand_letters(letters, d)
        top = {m: c for m, c in s.terms.items() if len(m) == d}
        if top:
            return d, top
    return None


def magnus_trivial(w: Word) -> bool:
    """True iff E(w) = 1, checked through degree = syllable count of reduced ``w``.

    A nontrivial reduced word ``x_{i1}^{p1}...x_{is}^{ps}`` has coefficient
    ``p1...ps`` on ``X_{i1}...X_{is}``, so degree ``s`` is enough.  Degrees are
    scanned upward and the scan stops at the first nonzero term.
    """
    syllables = reduce_syllables(w.syllables)
    if not syllables:
        return True
    return lowest_nonvanishing(syllables, len(syllables)) is None
