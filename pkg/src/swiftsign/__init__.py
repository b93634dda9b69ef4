"""swiftsign: an engine for composing sign-language signs from elementary glyphs.

Layers, bottom up: an immutable glyph catalog with per-category facet
schemas, order-free faceted search, a pure-value sign document model,
a co-occurrence hint engine over the saved-sign corpus, deterministic
text (SWT1) and SVG exports, an append-only sign store, and an HTTP API
plus CLI on top.
"""

from __future__ import annotations

from . import errors
from .catalog import Catalog, Category, Facet, FacetSchema, Glyph, load_catalog, load_catalog_path
from .hints import CooccurrenceTable, HintResult, hint_count, hints, rebuild, record_sign
from .notation import parse_text, serialize_text
from .search import FacetQuery, clear_facet, execute, new_query, remaining_counts, set_facet
from .sign import Box, PlacedGlyph, Sign, add_glyph, bounding_box, clear, delete, mirror, move, rotate
from .store import SignRecord, SignStore, SignSummary
from .svg import export_svg

__version__ = "0.1.0"

__all__ = [
    "Box",
    "Catalog",
    "Category",
    "CooccurrenceTable",
    "Facet",
    "FacetQuery",
    "FacetSchema",
    "Glyph",
    "HintResult",
    "PlacedGlyph",
    "Sign",
    "SignRecord",
    "SignStore",
    "SignSummary",
    "add_glyph",
    "bounding_box",
    "clear",
    "clear_facet",
    "delete",
    "errors",
    "execute",
    "export_svg",
    "hint_count",
    "hints",
    "load_catalog",
    "load_catalog_path",
    "mirror",
    "move",
    "new_query",
    "parse_text",
    "rebuild",
    "record_sign",
    "remaining_counts",
    "rotate",
    "serialize_text",
    "set_facet",
    "__version__",
]
