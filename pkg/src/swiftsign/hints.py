"""Hint engine: glyphs of an area statistically compatible with the canvas.

Statistics are plain co-occurrence counts over the saved-sign corpus,
keyed on base forms (the rotation/handedness-neutral family of each
glyph) so data is not smeared across every orientation variant. Within
one sign a base counts once, however many of its variants are placed.

Compatibility is conjunctive: with glyphs placed, a candidate base must
co-occur with *every* placed base in at least ``tau`` saved signs, and is
scored by its weakest such pairing. With an empty canvas, the engine
falls back to area popularity (unary counts; tau does not apply).

The table is an immutable value; ``record_sign`` returns a new one
(copy-on-write), so any number of readers can keep using their snapshot
while the store installs the successor.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .catalog import Catalog, Glyph
from .sign import Sign


def _pair_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class CooccurrenceTable:
    """Unordered pair counts and unary counts of base forms across signs."""

    pair_counts: Mapping[tuple[str, str], int]
    unary_counts: Mapping[str, int]
    sign_total: int

    def __post_init__(self):
        object.__setattr__(self, "pair_counts", MappingProxyType(dict(self.pair_counts)))
        object.__setattr__(self, "unary_counts", MappingProxyType(dict(self.unary_counts)))

    @classmethod
    def empty(cls) -> CooccurrenceTable:
        return cls({}, {}, 0)

    def pair(self, a: str, b: str) -> int:
        """Signs containing both base forms; order-insensitive, 0 for a==b."""
        if a == b:
            return 0
        return self.pair_counts.get(_pair_key(a, b), 0)

    def unary(self, base_id: str) -> int:
        return self.unary_counts.get(base_id, 0)

    def __eq__(self, other):
        if not isinstance(other, CooccurrenceTable):
            return NotImplemented
        return (
            self.sign_total == other.sign_total
            and dict(self.unary_counts) == dict(other.unary_counts)
            and dict(self.pair_counts) == dict(other.pair_counts)
        )


@dataclass(frozen=True)
class HintResult:
    """Ranked compatible glyphs; ``total`` is the pre-truncation count."""

    hints: tuple[tuple[Glyph, int], ...]
    total: int


def _sign_bases(sign: Sign, catalog: Catalog) -> set[str]:
    return {catalog.get_glyph(p.glyph_id).base_id for p in sign.placements}


def rebuild(corpus: Iterable[Sign], catalog: Catalog) -> CooccurrenceTable:
    """Count the whole corpus from scratch (startup / recovery path)."""
    pair_counts: dict[tuple[str, str], int] = {}
    unary_counts: dict[str, int] = {}
    total = 0
    for sign in corpus:
        total += 1
        bases = sorted(_sign_bases(sign, catalog))
        for b in bases:
            unary_counts[b] = unary_counts.get(b, 0) + 1
        for a, b in combinations(bases, 2):
            pair_counts[(a, b)] = pair_counts.get((a, b), 0) + 1
    return CooccurrenceTable(pair_counts, unary_counts, total)


def record_sign(table: CooccurrenceTable, sign: Sign, catalog: Catalog) -> CooccurrenceTable:
    """Table as if the sign were appended to the corpus and rebuild re-run."""
    pair_counts = dict(table.pair_counts)
    unary_counts = dict(table.unary_counts)
    bases = sorted(_sign_bases(sign, catalog))
    for b in bases:
        unary_counts[b] = unary_counts.get(b, 0) + 1
    for a, b in combinations(bases, 2):
        pair_counts[(a, b)] = pair_counts.get((a, b), 0) + 1
    return CooccurrenceTable(pair_counts, unary_counts, table.sign_total + 1)


def hints(
    table: CooccurrenceTable,
    catalog: Catalog,
    area: str,
    placed: Sequence[str],
    tau: int = 1,
    limit: int | None = None,
) -> HintResult:
    """Ranked glyphs of ``area`` compatible with the placed glyphs.

    Candidate bases expand to every catalog variant sharing them; order is
    score descending, then unary count descending, then glyph id. ``limit``
    truncates the list; ``total`` still reports the full candidate count.
    """
    if tau < 1:
        raise ValueError(f"tau must be >= 1, got {tau}")
    if limit is not None and limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    placed_bases = {catalog.get_glyph(pid).base_id for pid in placed}
    area_glyphs = catalog.glyphs_in_category(area)

    by_base: dict[str, list[Glyph]] = {}
    for g in area_glyphs:
        by_base.setdefault(g.base_id, []).append(g)

    scored: list[tuple[str, int]] = []
    if not placed_bases:
        for base in by_base:
            count = table.unary(base)
            if count >= 1:
                scored.append((base, count))
    else:
        for base in by_base:
            if base in placed_bases:
                continue
            score = min(table.pair(base, p) for p in placed_bases)
            if score >= tau:
                scored.append((base, score))

    expanded: list[tuple[Glyph, int]] = []
    for base, score in scored:
        for g in by_base[base]:
            expanded.append((g, score))
    expanded.sort(key=lambda e: (-e[1], -table.unary(e[0].base_id), e[0].id))

    total = len(expanded)
    if limit is not None:
        expanded = expanded[:limit]
    return HintResult(hints=tuple(expanded), total=total)


def hint_count(
    table: CooccurrenceTable,
    catalog: Catalog,
    area: str,
    placed: Sequence[str],
    tau: int = 1,
) -> int:
    """The minimized-panel badge: compatible glyph count, untruncated."""
    return hints(table, catalog, area, placed, tau=tau, limit=None).total
