"""Built-in links and Seifert matrices.

Longitude words are zero-framed and written in the meridians.  The Hopf
and Borromean words are the standard ones; the Whitehead words come from
the closed 3-braid s1 s1 s2^-1 s1 s2^-1 (Artin action on the free group,
then Milnor's conjugate-substitution iteration, which was stable from the
third round on).  Its closure has Alexander polynomial (t - 1)^3 up to
units and linking number 0.

Every link here has unknotted components and Brunnian sublinks, so the
rest of the link is trivial whichever component is singled out; the
``trivial_rest_asserted`` flag is set accordingly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Optional

from .milnor import LinkPresentation
from .seifert import SeifertMatrix, build_kk_matrix
from .words import Word


@dataclass(frozen=True)
class Fixture:
    name: str
    notes: str
    presentation: Optional[LinkPresentation] = None
    seifert: Optional[SeifertMatrix] = None

    def __post_init__(self):
        if self.presentation is None and self.seifert is None:
            raise ValueError(f"fixture {self.name!r} carries no payload")


def trivial_link(n: int, with_zero: bool = False) -> LinkPresentation:
    return LinkPresentation((Word(),) * (n + with_zero), has_component_zero=with_zero,
                            trivial_rest_asserted=True)


_STATIC = [
    Fixture("hopf", "Hopf link, linking number 1",
            LinkPresentation.from_strings(["m2", "m1"], trivial_rest_asserted=True)),
    Fixture("borromean", "Borromean rings; each longitude is a commutator of the other two meridians",
            LinkPresentation.from_strings([
                "m2 m3 m2^-1 m3^-1",
                "m3 m1 m3^-1 m1^-1",
                "m1 m2 m1^-1 m2^-1",
            ], trivial_rest_asserted=True)),
    Fixture("whitehead", "Whitehead link, derived from the closed braid s1^2 s2^-1 s1 s2^-1; mubar(1122) = 1",
            LinkPresentation.from_strings([
                "m2 m1 m2^-1 m1^-1 m2^-1 m1 m2 m1^-1",
                "m1 m2 m1^-1 m2^-1 m1^-1 m2 m1 m2^-1",
            ], trivial_rest_asserted=True)),
    Fixture("borromean0", "Borromean rings relabelled 0,1,2; component 0 is not null-homotopic",
            LinkPresentation.from_strings([
                "m1 m2 m1^-1 m2^-1",
                "m2 m0 m2^-1 m0^-1",
                "m0 m1 m0^-1 m1^-1",
            ], has_component_zero=True, trivial_rest_asserted=True)),
    Fixture("whitehead0", "Whitehead link relabelled 0,1; component 0 is null-homotopic (lk = 0)",
            LinkPresentation.from_strings([
                "m1 m0 m1^-1 m0^-1 m1^-1 m0 m1 m0^-1",
                "m0 m1 m0^-1 m1^-1 m0^-1 m1 m0 m1^-1",
            ], has_component_zero=True, trivial_rest_asserted=True)),
    Fixture("trefoil", "Seifert matrix of a trefoil",
            seifert=SeifertMatrix.from_rows([[-1, 1], [0, -1]])),
]

REGISTRY: Dict[str, Fixture] = {f.name: f for f in _STATIC}


def get_fixture(name: str) -> Fixture:
    """Look up a fixture; ``trivial-N`` and ``kkN`` are generated on demand."""
    if name in REGISTRY:
        return REGISTRY[name]
    m = re.fullmatch(r"trivial-(\d+)", name)
    if m and int(m.group(1)) >= 1:
        n = int(m.group(1))
        return Fixture(name, f"trivial {n}-component link", trivial_link(n))
    m = re.fullmatch(r"kk(\d+)", name)
    if m and int(m.group(1)) >= 2:
        k = int(m.group(1))
        return Fixture(name, f"Seifert matrix of K_{k}", seifert=build_kk_matrix(k))
    raise KeyError(name)


def list_fixtures():
    return list(REGISTRY.values()) + [
        Fixture("trivial-N", "trivial N-component link (any N >= 1)", trivial_link(1)),
        Fixture("kkN", "Seifert matrix of K_k (any k >= 2)", seifert=build_kk_matrix(2)),
    ]
