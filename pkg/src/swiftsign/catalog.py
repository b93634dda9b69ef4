"""Immutable glyph inventory: categories, per-category facet schemas, glyphs.

The catalog is loaded once from a line-oriented text document and never
mutated afterwards, so it can be shared freely across threads. The document
format is data-driven: any inventory whose glyphs can be described by
mutually exclusive feature values loads without code changes.

Document format (UTF-8, ``#`` begins a comment line)::

    CATALOG <name> <version>
    CATEGORY <token> LABEL "<display>" KIND <anatomical|symbolic>
    FACET <category> <facet-name> LABEL "<display>" VALUES <v1>,<v2>,...
    GLYPH <cat>:<local> BASE <cat>:<local> FACETS <n>=<v>,... PATH "<data>" ANCHOR <x>,<y>

BASE defaults to the glyph itself, ANCHOR to the art-box center (50,50).
Glyph drawings are vector path data in a 100x100 local unit box.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterator, Mapping

from .errors import (
    CatalogSyntaxError,
    CatalogValidationError,
    UnknownCategoryError,
    UnknownFacetError,
    UnknownGlyphError,
)

CATEGORY_KINDS = ("anatomical", "symbolic")

# Deployment catalogs are expected to cover these; test catalogs need not.
STANDARD_ANATOMICAL = ("head", "shoulders", "hands", "arms")
STANDARD_SYMBOLIC = ("punctuation", "contact")

_CATEGORY_RE = re.compile(r"^[a-z][a-z0-9-]*$")
_LOCAL_RE = re.compile(r"^[A-Za-z0-9-]+$")
_VALUE_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9_.-]*$")
_PATH_RE = re.compile(r"^[A-Za-z0-9 ,.+-]+$")

ART_BOX = 100  # glyph drawings live in a 100x100 local unit box


def glyph_id(category: str, local: str) -> str:
    return f"{category}:{local}"


def split_glyph_id(gid: str) -> tuple[str, str]:
    """Split ``category:local``; raises ValueError on malformed ids."""
    category, sep, local = gid.partition(":")
    if not sep or not _CATEGORY_RE.match(category) or not _LOCAL_RE.match(local):
        raise ValueError(f"malformed glyph id: {gid!r}")
    return category, local


@dataclass(frozen=True)
class Facet:
    name: str
    label: str
    values: tuple[str, ...]


@dataclass(frozen=True)
class FacetSchema:
    """One category's Choose Boxes: ordered facets with exclusive value domains."""

    category: str
    facets: tuple[Facet, ...]

    @property
    def facet_names(self) -> tuple[str, ...]:
        return tuple(f.name for f in self.facets)

    def facet(self, name: str) -> Facet:
        for f in self.facets:
            if f.name == name:
                return f
        raise UnknownFacetError(self.category, name)

    def domain(self, name: str) -> tuple[str, ...]:
        return self.facet(name).values


@dataclass(frozen=True)
class Category:
    token: str
    label: str
    kind: str  # "anatomical" | "symbolic"


@dataclass(frozen=True)
class Glyph:
    """One immutable catalog entry.

    ``base_id`` names the rotation/handedness-neutral family representative
    (possibly the glyph itself); co-occurrence statistics key on it.
    """

    id: str
    base_id: str
    category: str
    facets: Mapping[str, str]
    path: str
    anchor: tuple[int, int] = (50, 50)

    def __post_init__(self):
        object.__setattr__(self, "facets", MappingProxyType(dict(self.facets)))

    def __eq__(self, other):
        if not isinstance(other, Glyph):
            return NotImplemented
        return (
            self.id == other.id
            and self.base_id == other.base_id
            and self.category == other.category
            and dict(self.facets) == dict(other.facets)
            and self.path == other.path
            and self.anchor == other.anchor
        )

    def __hash__(self):
        return hash(self.id)


class Catalog:
    """Validated, immutable inventory with precomputed search indexes."""

    def __init__(
        self,
        name: str,
        version: str,
        categories: tuple[Category, ...],
        schemas: Mapping[str, FacetSchema],
        glyphs: Mapping[str, Glyph],
    ):
        self.name = name
        self.version = version
        self.categories = categories
        self._schemas = dict(schemas)
        self._glyphs = dict(glyphs)

        # Per category: glyphs sorted by rendered id, plus one posting set
        # per (facet, value) holding positions into that sorted list. An
        # execute() is then a set intersection + integer sort.
        self._sorted: dict[str, tuple[Glyph, ...]] = {}
        self._postings: dict[str, dict[str, dict[str, frozenset[int]]]] = {}
        self._variants: dict[str, tuple[str, ...]] = {}
        for cat in categories:
            members = sorted(
                (g for g in self._glyphs.values() if g.category == cat.token),
                key=lambda g: g.id,
            )
            self._sorted[cat.token] = tuple(members)
            facet_map: dict[str, dict[str, set[int]]] = {}
            for pos, g in enumerate(members):
                for fname, fvalue in g.facets.items():
                    facet_map.setdefault(fname, {}).setdefault(fvalue, set()).add(pos)
            self._postings[cat.token] = {
                fname: {v: frozenset(ps) for v, ps in values.items()}
                for fname, values in facet_map.items()
            }
        variant_acc: dict[str, list[str]] = {}
        for g in self._glyphs.values():
            variant_acc.setdefault(g.base_id, []).append(g.id)
        self._variants = {b: tuple(sorted(ids)) for b, ids in variant_acc.items()}

    # -- lookups ---------------------------------------------------------

    @property
    def glyphs(self) -> Mapping[str, Glyph]:
        return MappingProxyType(self._glyphs)

    @property
    def category_tokens(self) -> tuple[str, ...]:
        return tuple(c.token for c in self.categories)

    def has_category(self, category: str) -> bool:
        return category in self._schemas

    def facet_schema(self, category: str) -> FacetSchema:
        try:
            return self._schemas[category]
        except KeyError:
            raise UnknownCategoryError(category) from None

    def glyphs_in_category(self, category: str) -> tuple[Glyph, ...]:
        """All glyphs of a category, ordered by glyph id ascending."""
        try:
            return self._sorted[category]
        except KeyError:
            raise UnknownCategoryError(category) from None

    def get_glyph(self, gid: str) -> Glyph:
        try:
            return self._glyphs[gid]
        except KeyError:
            raise UnknownGlyphError(gid) from None

    def variants_of_base(self, base_id: str) -> tuple[str, ...]:
        """Ids of every glyph sharing this base form (sorted)."""
        return self._variants.get(base_id, ())

    def postings(self, category: str) -> Mapping[str, Mapping[str, frozenset[int]]]:
        return self._postings[category]

    def __len__(self) -> int:
        return len(self._glyphs)

    def __iter__(self) -> Iterator[Glyph]:
        return iter(self._glyphs.values())

    def __eq__(self, other):
        if not isinstance(other, Catalog):
            return NotImplemented
        return (
            self.name == other.name
            and self.version == other.version
            and self.categories == other.categories
            and self._schemas == other._schemas
            and self._glyphs == other._glyphs
        )

    def __repr__(self):
        return f"<Catalog {self.name} v{self.version}: {len(self._glyphs)} glyphs>"


# -- document parsing ------------------------------------------------------


def _tokenize(line: str, line_no: int) -> list[str]:
    """Split a directive line into words and quoted strings.

    Quoted strings keep a leading ``"`` marker so the parser can tell them
    apart from bare words; ``\\"`` and ``\\\\`` escapes are honored.
    """
    tokens: list[str] = []
    i, n = 0, len(line)
    while i < n:
        ch = line[i]
        if ch in " \t":
            i += 1
            continue
        if ch == '"':
            out = []
            i += 1
            while i < n and line[i] != '"':
                if line[i] == "\\" and i + 1 < n and line[i + 1] in '"\\':
                    out.append(line[i + 1])
                    i += 2
                else:
                    out.append(line[i])
                    i += 1
            if i >= n:
                raise CatalogSyntaxError(line_no, "unterminated quoted string")
            i += 1
            tokens.append('"' + "".join(out))
        else:
            j = i
            while j < n and line[j] not in ' \t"':
                j += 1
            tokens.append(line[i:j])
            i = j
    return tokens


def _quoted(tokens: list[str], idx: int, what: str, line_no: int) -> str:
    if idx >= len(tokens) or not tokens[idx].startswith('"'):
        raise CatalogSyntaxError(line_no, f"expected quoted {what}")
    return tokens[idx][1:]


def _word(tokens: list[str], idx: int, what: str, line_no: int) -> str:
    if idx >= len(tokens) or tokens[idx].startswith('"'):
        raise CatalogSyntaxError(line_no, f"expected {what}")
    return tokens[idx]


def _keyword(tokens: list[str], idx: int, kw: str, line_no: int) -> None:
    if idx >= len(tokens) or tokens[idx] != kw:
        raise CatalogSyntaxError(line_no, f"expected {kw}")


@dataclass
class _RawGlyph:
    line_no: int
    gid: str
    base: str | None
    facets: list[tuple[str, str]] = field(default_factory=list)
    path: str = ""
    anchor: tuple[int, int] = (50, 50)


def _parse_glyph_line(tokens: list[str], line_no: int) -> _RawGlyph:
    gid = _word(tokens, 1, "glyph id", line_no)
    try:
        split_glyph_id(gid)
    except ValueError:
        raise CatalogSyntaxError(line_no, f"malformed glyph id {gid!r}") from None
    raw = _RawGlyph(line_no=line_no, gid=gid, base=None)
    idx = 2
    if idx < len(tokens) and tokens[idx] == "BASE":
        base = _word(tokens, idx + 1, "base glyph id", line_no)
        try:
            split_glyph_id(base)
        except ValueError:
            raise CatalogSyntaxError(line_no, f"malformed base id {base!r}") from None
        raw.base = base
        idx += 2
    if idx < len(tokens) and tokens[idx] == "FACETS":
        spec = _word(tokens, idx + 1, "facet assignments", line_no)
        for part in spec.split(","):
            name, sep, value = part.partition("=")
            if not sep or not name or not value:
                raise CatalogSyntaxError(line_no, f"malformed facet assignment {part!r}")
            raw.facets.append((name, value))
        idx += 2
    _keyword(tokens, idx, "PATH", line_no)
    raw.path = _quoted(tokens, idx + 1, "path data", line_no)
    idx += 2
    if idx < len(tokens) and tokens[idx] == "ANCHOR":
        spec = _word(tokens, idx + 1, "anchor point", line_no)
        x_s, sep, y_s = spec.partition(",")
        if not sep or not x_s.isdigit() or not y_s.isdigit():
            raise CatalogSyntaxError(line_no, f"malformed anchor {spec!r}")
        raw.anchor = (int(x_s), int(y_s))
        idx += 2
    if idx != len(tokens):
        raise CatalogSyntaxError(line_no, f"unexpected trailing tokens: {tokens[idx]!r}")
    return raw


def load_catalog(source: str) -> Catalog:
    """Parse and validate a catalog document; returns an immutable Catalog.

    Loading the same source twice yields equal catalogs. Raises
    CatalogSyntaxError (line + reason) or CatalogValidationError (first
    offending glyph/facet named).
    """
    header: tuple[str, str] | None = None
    categories: list[Category] = []
    facets_by_cat: dict[str, list[Facet]] = {}
    raw_glyphs: list[_RawGlyph] = []

    for line_no, line in enumerate(source.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = _tokenize(stripped, line_no)
        directive = tokens[0]
        if directive == "CATALOG":
            if header is not None:
                raise CatalogSyntaxError(line_no, "duplicate CATALOG header")
            name = _word(tokens, 1, "catalog name", line_no)
            version = _word(tokens, 2, "catalog version", line_no)
            header = (name, version)
        elif directive == "CATEGORY":
            token = _word(tokens, 1, "category token", line_no)
            _keyword(tokens, 2, "LABEL", line_no)
            label = _quoted(tokens, 3, "label", line_no)
            _keyword(tokens, 4, "KIND", line_no)
            kind = _word(tokens, 5, "category kind", line_no)
            if kind not in CATEGORY_KINDS:
                raise CatalogSyntaxError(line_no, f"unknown category kind {kind!r}")
            if not _CATEGORY_RE.match(token):
                raise CatalogSyntaxError(line_no, f"malformed category token {token!r}")
            categories.append(Category(token, label, kind))
        elif directive == "FACET":
            cat = _word(tokens, 1, "category token", line_no)
            fname = _word(tokens, 2, "facet name", line_no)
            _keyword(tokens, 3, "LABEL", line_no)
            label = _quoted(tokens, 4, "label", line_no)
            _keyword(tokens, 5, "VALUES", line_no)
            values = _word(tokens, 6, "value list", line_no).split(",")
            if not _CATEGORY_RE.match(fname):
                raise CatalogSyntaxError(line_no, f"malformed facet name {fname!r}")
            for v in values:
                if not _VALUE_RE.match(v):
                    raise CatalogSyntaxError(line_no, f"malformed facet value {v!r}")
            facets_by_cat.setdefault(cat, []).append(Facet(fname, label, tuple(values)))
        elif directive == "GLYPH":
            raw_glyphs.append(_parse_glyph_line(tokens, line_no))
        else:
            raise CatalogSyntaxError(line_no, f"unknown directive {directive!r}")

    if header is None:
        raise CatalogSyntaxError(0, "missing CATALOG header")
    return _validate(header, categories, facets_by_cat, raw_glyphs)


def _validate(
    header: tuple[str, str],
    categories: list[Category],
    facets_by_cat: dict[str, list[Facet]],
    raw_glyphs: list[_RawGlyph],
) -> Catalog:
    if not categories:
        raise CatalogValidationError("empty catalog: no categories declared")
    seen_cats: set[str] = set()
    for c in categories:
        if c.token in seen_cats:
            raise CatalogValidationError(f"duplicate category {c.token!r}")
        seen_cats.add(c.token)

    schemas: dict[str, FacetSchema] = {}
    for c in categories:
        facets = facets_by_cat.pop(c.token, [])
        names: set[str] = set()
        for f in facets:
            if f.name in names:
                raise CatalogValidationError(
                    f"category {c.token!r}: duplicate facet {f.name!r}"
                )
            names.add(f.name)
            if not f.values:
                raise CatalogValidationError(
                    f"facet {f.name!r} (category {c.token!r}): empty value domain"
                )
            if len(set(f.values)) != len(f.values):
                raise CatalogValidationError(
                    f"facet {f.name!r} (category {c.token!r}): duplicate domain values"
                )
        schemas[c.token] = FacetSchema(c.token, tuple(facets))
    if facets_by_cat:
        stray = next(iter(facets_by_cat))
        raise CatalogValidationError(f"facet declared for unknown category {stray!r}")

    glyphs: dict[str, Glyph] = {}
    for raw in raw_glyphs:
        category, _ = split_glyph_id(raw.gid)
        if category not in schemas:
            raise CatalogValidationError(
                f"glyph {raw.gid!r}: unknown category {category!r}"
            )
        if raw.gid in glyphs:
            raise CatalogValidationError(f"duplicate glyph id {raw.gid!r}")
        schema = schemas[category]
        assigned: dict[str, str] = {}
        for fname, fvalue in raw.facets:
            if fname not in schema.facet_names:
                raise CatalogValidationError(
                    f"glyph {raw.gid!r}: facet {fname!r} not in schema of {category!r}"
                )
            if fvalue not in schema.domain(fname):
                raise CatalogValidationError(
                    f"glyph {raw.gid!r}: value {fvalue!r} not in domain of {fname!r}"
                )
            if fname in assigned:
                raise CatalogValidationError(
                    f"glyph {raw.gid!r}: facet {fname!r} assigned twice"
                )
            assigned[fname] = fvalue
        if not raw.path.strip():
            raise CatalogValidationError(f"glyph {raw.gid!r}: empty drawing")
        if not _PATH_RE.match(raw.path):
            raise CatalogValidationError(
                f"glyph {raw.gid!r}: path contains unsupported characters"
            )
        ax, ay = raw.anchor
        if not (0 <= ax <= ART_BOX and 0 <= ay <= ART_BOX):
            raise CatalogValidationError(
                f"glyph {raw.gid!r}: anchor {raw.anchor} outside the {ART_BOX}x{ART_BOX} art box"
            )
        glyphs[raw.gid] = Glyph(
            id=raw.gid,
            base_id=raw.base or raw.gid,
            category=category,
            facets=assigned,
            path=raw.path,
            anchor=raw.anchor,
        )

    for g in glyphs.values():
        base = glyphs.get(g.base_id)
        if base is None:
            raise CatalogValidationError(
                f"glyph {g.id!r}: base {g.base_id!r} does not resolve"
            )
        if base.category != g.category:
            raise CatalogValidationError(
                f"glyph {g.id!r}: base {g.base_id!r} is in category {base.category!r}"
            )

    name, version = header
    return Catalog(name, version, tuple(categories), schemas, glyphs)


def load_catalog_path(path: str | Path) -> Catalog:
    return load_catalog(Path(path).read_text(encoding="utf-8"))


def missing_standard_areas(catalog: Catalog) -> tuple[str, ...]:
    """Standard deployment areas absent from this catalog (warning material)."""
    anatomical = {c.token for c in catalog.categories if c.kind == "anatomical"}
    symbolic = {c.token for c in catalog.categories if c.kind == "symbolic"}
    missing = [t for t in STANDARD_ANATOMICAL if t not in anatomical]
    missing += [t for t in STANDARD_SYMBOLIC if t not in symbolic]
    return tuple(missing)
