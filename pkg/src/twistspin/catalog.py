"""Built-in knot diagrams as crossing-relator lists.

Every entry was generated mechanically from a braid or 4-plat closure
(`tools/derive_catalog.py`) and cross-checked against independent invariants
(Fox coloring counts, Alexander polynomial, abelianization rank); the test
suite re-verifies all of that on the frozen data.  Counting results computed
from these diagrams are group invariants, hence diagram-independent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentations import WirtingerPresentation


@dataclass(frozen=True)
class KnotCatalogEntry:
    name: str
    presentation: WirtingerPresentation
    citation: str  # how the diagram was obtained


_RAW: tuple[tuple[str, int, tuple[tuple[int, int, int], ...], str], ...] = (
    (
        "unknot",
        1,
        (),
        "one-arc diagram with no crossings",
    ),
    (
        "trefoil",
        3,
        ((1, 2, 3), (3, 1, 2), (2, 3, 1)),
        "closure of the 2-strand braid s1^3 (3 crossings, minimal)",
    ),
    (
        "figure-eight",
        4,
        ((1, 2, 3), (4, 2, 1), (3, 4, 1), (2, 4, 3)),
        "closure of the 3-strand braid s1 s2^-1 s1 s2^-1 (4 crossings, minimal)",
    ),
    (
        "5_1",
        5,
        ((1, 2, 3), (3, 1, 4), (4, 3, 5), (5, 4, 2), (2, 5, 1)),
        "closure of the 2-strand braid s1^5 (5 crossings, minimal)",
    ),
    (
        "5_2",
        5,
        ((1, 2, 3), (2, 4, 1), (4, 1, 5), (5, 3, 4), (3, 5, 2)),
        "4-plat closure of s2 s1^-1 s2^3 (5 crossings, minimal)",
    ),
    (
        "6_1",
        6,
        ((1, 2, 3), (2, 1, 4), (4, 1, 5), (5, 6, 4), (6, 5, 3), (3, 2, 6)),
        "4-plat closure of s2 s1^-1 s2^4 (6 crossings, minimal)",
    ),
)


def _build() -> dict[str, KnotCatalogEntry]:
    entries = {}
    for name, l, triples, citation in _RAW:
        pres = WirtingerPresentation.from_crossings(name, l, triples, provenance=citation)
        if not pres.abelianization_is_infinite_cyclic():
            raise AssertionError(f"catalog entry {name} fails the abelianization check")
        entries[name] = KnotCatalogEntry(name=name, presentation=pres, citation=citation)
    return entries


CATALOG: dict[str, KnotCatalogEntry] = _build()

# common aliases accepted anywhere a knot name is taken
_ALIASES = {
    "3_1": "trefoil",
    "4_1": "figure-eight",
    "0_1": "unknot",
}


def catalog_names() -> tuple[str, ...]:
    return tuple(CATALOG)


def get_knot(name: str) -> WirtingerPresentation:
    key = name.strip()
    key = _ALIASES.get(key, key)
    entry = CATALOG.get(key)
    if entry is None:
        raise KeyError(f"unknown catalog knot {name!r}; known: {', '.join(CATALOG)}")
    return entry.presentation
