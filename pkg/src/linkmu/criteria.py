"""Decision procedures and obstructions built on Milnor numbers.

Criteria that range over finitely many multi-indices (``r(I) = 1``, the
free-group test for null-homotopy) give unconditional verdicts.  The
self-Delta criterion ranges over all ``r(I) <= 2`` and is only exhaustive
once the length bound reaches ``2 * (number of components)``; below that
the verdict is ``holds-up-to-bound``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from . import laurent
from .laurent import LaurentPoly
from .magnus import lowest_nonvanishing, expand_letters
from .milnor import (
    LinkPresentation,
    MultiIndex,
    PresentationError,
    Residue,
    enumerate_indices,
    format_index,
    mubar,
    r,
)
from .seifert import build_kk_matrix, conway_from_seifert
from .words import erase_generator, is_trivial

HOLDS = "holds"
FAILS = "fails"
HOLDS_UP_TO_BOUND = "holds-up-to-bound"


@dataclass
class CriterionReport:
    criterion: str
    verdict: str
    bound: Optional[int] = None
    witnesses: List[Tuple[MultiIndex, Residue]] = field(default_factory=list)
    notes: Dict[str, object] = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in (HOLDS, FAILS, HOLDS_UP_TO_BOUND):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == FAILS and not self.witnesses:
            raise ValueError("a failing report needs witnesses")

    @property
    def ok(self) -> bool:
        return self.verdict != FAILS

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "verdict": self.verdict,
            "bound": self.bound,
            "witnesses": [
                {"index": format_index(I), "value": res.value, "modulus": res.modulus}
                for I, res in self.witnesses
            ],
            "notes": dict(self.notes),
        }

    def render(self) -> str:
        head = self.verdict
        if self.bound is not None:
            head += f" (|I| <= {self.bound})"
        if not self.witnesses:
            return head
        return head + "; " + "; ".join(
            f"witness {format_index(I)}: {res.value}" + (f" (mod {res.modulus})" if res.modulus else "")
            for I, res in self.witnesses
        )


def _violations(L: LinkPresentation, indices) -> List[Tuple[MultiIndex, Residue]]:
    out = []
    for I in indices:
        res = mubar(L, I)
        if not res.is_zero():
            out.append((I, res))
    return out


# -- null-homotopy of K_0 in the complement of a trivial link -------

def nullhomotopy_test(L: LinkPresentation, component: Optional[int] = None) -> CriterionReport:
    """Is a component null-homotopic in the complement of the others?

    The component defaults to 0, which the presentation must then declare.
    Exact, assuming the other components form a trivial link (the caller's
    assertion).  Route one erases ``m_c`` from the longitude of component
    ``c`` and freely reduces.  Route two expands that longitude with
    ``X_c = 0`` and asks whether the series is 1 through a degree bound that
    cannot be smaller than the reduced word.  Disagreement raises
    ``RuntimeError``.  Witnesses are multi-indices ``I c``.
    """
    if component is None:
        if not L.has_component_zero:
            raise PresentationError("null-homotopy test needs a component 0 or an explicit component")
        component = 0
    c = component
    lc = L.longitude(c)
    erased = erase_generator(lc, c)
    by_reduction = is_trivial(erased)

    letters = lc.syllables
    bound = sum(1 for i, _ in letters if i != c)
    low = lowest_nonvanishing(letters, bound, drop={c}) if bound else None
    by_magnus = low is None
    if by_reduction != by_magnus:
        raise RuntimeError(f"null-homotopy routes disagree on {lc}")

    notes = {"component": c, "erased_longitude": str(erased), "routes_agree": True}
    if by_reduction:
        return CriterionReport("nullhomotopy", HOLDS, notes=notes)

    d, top = low
    notes["lowest_degree"] = d
    witnesses = _nullhomotopy_witnesses(L, c, letters, d, top, bound)
    return CriterionReport("nullhomotopy", FAILS, witnesses=witnesses, notes=notes)


def _nullhomotopy_witnesses(L, c, letters, d, top, bound, extra_degrees=3):
    """Lowest-degree multi-indices ``I c`` with nonzero mubar.

    Falls back to the raw lowest-degree terms when every residue in the
    scanned window vanishes modulo its indeterminacy.
    """
    first = sorted((h + (c,), mubar(L, h + (c,))) for h in top)
    found = [(I, res) for I, res in first if not res.is_zero()]
    deg = d
    while not found and deg < min(bound, d + extra_degrees):
        deg += 1
        s = expand_letters([(i, e) for i, e in letters if i != c], deg)
        cand = sorted(m + (c,) for m in s.terms if len(m) == deg)
        found = [(I, res) for I in cand for res in [mubar(L, I)] if not res.is_zero()]
    return found or first


# -- link-homotopy and self-Delta triviality --------------------------------

def distinct_indices(ids) -> List[MultiIndex]:
    ids = sorted(ids)
    return [I for m in range(2, len(ids) + 1) for I in itertools.permutations(ids, m)]


def linkhomotopy_trivial(L: LinkPresentation) -> CriterionReport:
    """All mubar(I) with r(I) = 1 vanish.  The enumeration is complete."""
    indices = sorted(distinct_indices(L.component_ids), key=lambda I: (len(I), I))
    bad = _violations(L, indices)
    return CriterionReport("linkhomotopy", FAILS if bad else HOLDS, witnesses=bad,
                           notes={"checked": len(indices)})


def selfdelta_trivial_up_to(L: LinkPresentation, maxlen: int) -> CriterionReport:
    """All mubar(I) with r(I) <= 2 and |I| <= maxlen vanish."""
    if maxlen < 2:
        raise ValueError("maxlen must be >= 2")
    ids = L.component_ids
    full = 2 * len(ids)
    top = min(maxlen, full)
    indices = list(enumerate_indices(ids, top, where=lambda I: r(I) <= 2))
    bad = _violations(L, indices)
    if bad:
        verdict = FAILS
    elif maxlen >= full:
        verdict = HOLDS
    else:
        verdict = HOLDS_UP_TO_BOUND
    return CriterionReport("selfdelta", verdict, bound=top, witnesses=bad,
                           notes={"checked": len(indices), "complete_at": full})


# -- C_k obstruction --------------------------------------------------------

def ck_obstruction(L: LinkPresentation, i: int, maxlen: int) -> int:
    """Largest k <= maxlen such that mubar(I) = 0 whenever 1 <= #i in I <= k and |I| <= maxlen.

    If the value is ``k`` and ``k < maxlen``, some invariant with ``i``
    appearing ``k + 1`` times is nonzero, so component ``i`` is not
    C_{k+1}-equivalent to the trivial knot in the complement of the rest.
    """
    if i not in L.component_ids:
        raise PresentationError(f"unknown component id {i}")
    if maxlen < 2:
        raise ValueError("maxlen must be >= 2")
    worst = maxlen + 1
    for I in enumerate_indices(L.component_ids, maxlen, where=lambda I: i in I):
        c = Counter(I)[i]
        if c < worst and not mubar(L, I).is_zero():
            worst = c
    return min(worst - 1, maxlen)


# -- the [p, q] invariants of L_k and Murasugi's formula -----------------------

def murasugi_sum(values: Mapping[Tuple[int, int], int], k: int) -> int:
    missing = [(p, 2 * k - p) for p in range(1, 2 * k) if (p, 2 * k - p) not in values]
    if missing:
        raise ValueError(f"missing [p,q] values for p+q={2 * k}: {missing}")
    return sum((-1) ** (q - 1) * values[(p, q)] for p, q in ((p, 2 * k - p) for p in range(1, 2 * k)))


def murasugi_check(values: Mapping[Tuple[int, int], int], a: int, k: Optional[int] = None) -> bool:
    """Does sum_{p+q=2k} (-1)^(q-1) mubar([p,q]) equal -a?"""
    if k is None:
        totals = {p + q for p, q in values}
        if len(totals) != 1 or next(iter(totals)) % 2:
            raise ValueError("cannot infer k: keys must share one even total p+q")
        k = next(iter(totals)) // 2
    return murasugi_sum(values, k) == -a


def solve_mu_kk(k: int, a_2k_minus_1: int) -> int:
    """mubar([k,k]) when every other [p,q] with p+q = 2k vanishes.

    From (-1)^(k-1) mubar([k,k]) = -a_{2k-1}.
    """
    return (-1) ** k * a_2k_minus_1


@dataclass
class LkPipeline:
    k: int
    conway_kk: LaurentPoly
    combined: LaurentPoly
    truncated: LaurentPoly
    a: int
    mubar_kk: int
    only_top_term: bool

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "conway_K_k": str(self.conway_kk),
            "skein_combination": str(self.combined),
            "truncated": str(self.truncated),
            "modulus_degree": 2 * self.k,
            f"a_{2 * self.k - 1}": self.a,
            "mubar_kk": self.mubar_kk,
            "only_top_term": self.only_top_term,
        }


def lk_pipeline(k: int) -> LkPipeline:
    """Conway polynomial of L_k mod z^{2k} and the resulting mubar([k,k]).

    The term ``-z^2 * conway(L'_k)`` is dropped: ``conway(L'_k)`` vanishes
    mod z^{2k-2}, so the product vanishes mod z^{2k}.
    """
    if k < 2:
        raise ValueError("L_k is defined for k >= 2")
    z = LaurentPoly.gen("z")
    ck = conway_from_seifert(build_kk_matrix(k))
    combined = laurent.skein_combine([(LaurentPoly.const(1), z), (-z, ck)])
    truncated = laurent.truncate(combined, 2 * k)
    a = laurent.coefficient_a(truncated, 2 * k - 1)
    only_top = set(truncated.coeffs) <= {2 * k - 1}
    return LkPipeline(k, ck, combined, truncated, a, solve_mu_kk(k, a), only_top)


# -- satellite pair obstruction -----------------------------------------------

def satellite_obstruction(p: int) -> Tuple[int, bool]:
    """Residue of mubar_{L+}(1122) - mubar_{L-}(1122) modulo |p|, and whether it is nonzero.

    The difference is congruent to a_4(L+) - a_4(L-) = a_3(L0) = p - eps,
    with eps = sign(p).
    """
    if abs(p) < 2:
        raise ValueError("need |p| >= 2; |p| = 1 is the linking-number-one case where the pair is concordant")
    eps = 1 if p > 0 else -1
    residue = (p - eps) % abs(p)
    return residue, residue != 0
