"""Exception hierarchy shared by every layer.

Each class carries a stable ``code`` (used verbatim in the HTTP error
envelope) and a default ``http_status``. The session-ops endpoint remaps
most of these to 422 regardless, since a failed edit is a rejected
operation rather than a missing resource.
"""

from __future__ import annotations


class SwiftSignError(Exception):
    code = "error"
    http_status = 400


class CatalogSyntaxError(SwiftSignError):
    """Catalog document could not be tokenized/parsed; names the line."""

    code = "catalog_syntax"

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class CatalogValidationError(SwiftSignError):
    """Catalog parsed but violates an invariant; names the first offender."""

    code = "catalog_invalid"


class UnknownCategoryError(SwiftSignError):
    code = "unknown_category"
    http_status = 404

    def __init__(self, category: str):
        super().__init__(f"unknown category: {category!r}")
        self.category = category


class UnknownFacetError(SwiftSignError):
    code = "unknown_facet"
    http_status = 422

    def __init__(self, category: str, facet: str):
        super().__init__(f"category {category!r} has no facet {facet!r}")
        self.category = category
        self.facet = facet


class FacetDomainError(SwiftSignError):
    """Facet value outside the declared (mutually exclusive) domain."""

    code = "facet_domain"
    http_status = 422

    def __init__(self, category: str, facet: str, value: str):
        super().__init__(
            f"value {value!r} not in domain of facet {facet!r} (category {category!r})"
        )
        self.category = category
        self.facet = facet
        self.value = value


class UnknownGlyphError(SwiftSignError):
    code = "unknown_glyph"
    http_status = 404

    def __init__(self, glyph_id: str):
        super().__init__(f"unknown glyph: {glyph_id!r}")
        self.glyph_id = glyph_id


class OutOfCanvasError(SwiftSignError):
    code = "out_of_canvas"
    http_status = 422


class InvalidSelectionError(SwiftSignError):
    code = "invalid_selection"
    http_status = 422


class PlacementRangeError(SwiftSignError):
    """Placement field (rot, scale, canvas size) outside its legal range."""

    code = "placement_range"
    http_status = 422


class NotationSyntaxError(SwiftSignError):
    """SWT1 text is structurally malformed; carries position + expectation."""

    code = "notation_syntax"

    def __init__(self, pos: int, expected: str):
        super().__init__(f"col {pos}: expected {expected}")
        self.pos = pos
        self.expected = expected


class NotationRangeError(SwiftSignError):
    """SWT1 parsed but a field value is out of range (r>7, scale, position)."""

    code = "notation_range"

    def __init__(self, pos: int, message: str):
        super().__init__(f"col {pos}: {message}")
        self.pos = pos


class RecordNotFoundError(SwiftSignError):
    code = "record_not_found"
    http_status = 404

    def __init__(self, record_id: str):
        super().__init__(f"no stored sign with id {record_id!r}")
        self.record_id = record_id


class CorruptRecordError(SwiftSignError):
    """A store line failed to parse; reported with its line number, never skipped."""

    code = "corrupt_record"
    http_status = 500


class StorageError(SwiftSignError):
    """Persisting a record failed; the save was aborted and state untouched."""

    code = "storage"
    http_status = 500


class SessionNotFoundError(SwiftSignError):
    code = "session_not_found"
    http_status = 404

    def __init__(self, session_id: str):
        super().__init__(f"no session {session_id!r} (unknown or expired)")
        self.session_id = session_id


class InvalidOpError(SwiftSignError):
    """An editing op carried missing or malformed arguments."""

    code = "invalid_op"
    http_status = 422


class NoAreaError(SwiftSignError):
    """Hints were requested before any category was explored."""

    code = "no_area"
    http_status = 422

    def __init__(self):
        super().__init__("no explored area yet; apply a set_area op first")
