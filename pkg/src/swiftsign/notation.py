"""SWT1: the single-line text notation for a composed sign.

Grammar (ASCII, no whitespace)::

    sign       = "SWIFT1" ";" canvas *( ";" placement )
    canvas     = "C" INT "x" INT
    placement  = "G" glyphid "@" INT "," INT "r" DIGIT "m" BIT "s" INT
    glyphid    = category ":" local
    category   = [a-z0-9-]+
    local      = [A-Za-z0-9-]+
    INT        = decimal, no leading zeros (zero = "0")

Serialization is byte-deterministic (no timestamps, no float formatting);
parse_text(serialize_text(s)) reproduces the sign structurally. Labels and
store ids are carried by the store's record envelope, not the notation.
"""

from __future__ import annotations

import re

from .catalog import Catalog
from .errors import NotationRangeError, NotationSyntaxError, UnknownGlyphError
from .sign import SCALE_MAX, SCALE_MIN, PlacedGlyph, Sign

MAGIC = "SWIFT1"

_CATEGORY_CHARS = re.compile(r"[a-z0-9-]")
_LOCAL_CHARS = re.compile(r"[A-Za-z0-9-]")


def serialize_text(sign: Sign) -> str:
    """Emit the sign's SWT1 line, placements in z-order."""
    parts = [f"{MAGIC};C{sign.canvas_w}x{sign.canvas_h}"]
    for p in sign.placements:
        parts.append(
            f";G{p.glyph_id}@{p.x},{p.y}r{p.rot}m{1 if p.mirrored else 0}s{p.scale}"
        )
    return "".join(parts)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def eof(self) -> bool:
        return self.pos >= len(self.text)

    def literal(self, s: str, expected: str | None = None) -> None:
        if not self.text.startswith(s, self.pos):
            raise NotationSyntaxError(self.pos, expected or repr(s))
        self.pos += len(s)

    def int_(self, what: str) -> tuple[int, int]:
        """Unsigned decimal with no leading zeros; returns (value, start pos)."""
        start = self.pos
        while not self.eof() and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start : self.pos]
        if not digits:
            raise NotationSyntaxError(start, f"integer ({what})")
        if len(digits) > 1 and digits[0] == "0":
            raise NotationSyntaxError(start, f"integer without leading zeros ({what})")
        return int(digits), start

    def token(self, charset: re.Pattern[str], what: str) -> str:
        start = self.pos
        while not self.eof() and charset.match(self.text[self.pos]):
            self.pos += 1
        tok = self.text[start : self.pos]
        if not tok:
            raise NotationSyntaxError(start, what)
        return tok

    def digit(self, what: str) -> tuple[int, int]:
        start = self.pos
        if self.eof() or not self.text[self.pos].isdigit():
            raise NotationSyntaxError(start, f"digit ({what})")
        self.pos += 1
        return int(self.text[start]), start

    def bit(self, what: str) -> int:
        if self.eof() or self.text[self.pos] not in "01":
            raise NotationSyntaxError(self.pos, f"'0' or '1' ({what})")
        self.pos += 1
        return int(self.text[self.pos - 1])


def parse_text(text: str, catalog: Catalog) -> Sign:
    """Parse an SWT1 line and resolve its glyph ids against the catalog.

    Raises NotationSyntaxError (position + expected token),
    NotationRangeError (rot > 7, scale outside 100..4000, anchor outside
    canvas, non-positive canvas), or UnknownGlyphError after a clean parse.
    """
    sc = _Scanner(text)
    sc.literal(MAGIC, f"{MAGIC!r} header")
    sc.literal(";")
    sc.literal("C", "'C' canvas marker")
    w, wpos = sc.int_("canvas width")
    sc.literal("x", "'x' between canvas dimensions")
    h, hpos = sc.int_("canvas height")
    if w < 1:
        raise NotationRangeError(wpos, f"canvas width {w} must be at least 1")
    if h < 1:
        raise NotationRangeError(hpos, f"canvas height {h} must be at least 1")

    placements: list[PlacedGlyph] = []
    while not sc.eof():
        sc.literal(";", "';' before placement")
        sc.literal("G", "'G' placement marker")
        category = sc.token(_CATEGORY_CHARS, "glyph category token")
        sc.literal(":", "':' in glyph id")
        local = sc.token(_LOCAL_CHARS, "glyph local token")
        sc.literal("@", "'@' before position")
        x, xpos = sc.int_("x position")
        sc.literal(",", "',' between coordinates")
        y, ypos = sc.int_("y position")
        sc.literal("r", "'r' rotation marker")
        rot, rpos = sc.digit("rotation steps")
        sc.literal("m", "'m' mirror marker")
        mirrored = sc.bit("mirror flag")
        sc.literal("s", "'s' scale marker")
        scale, spos = sc.int_("scale per-mille")

        if x > w:
            raise NotationRangeError(xpos, f"x {x} outside canvas width {w}")
        if y > h:
            raise NotationRangeError(ypos, f"y {y} outside canvas height {h}")
        if rot > 7:
            raise NotationRangeError(rpos, f"rotation {rot} outside 0..7")
        if not SCALE_MIN <= scale <= SCALE_MAX:
            raise NotationRangeError(
                spos, f"scale {scale} outside {SCALE_MIN}..{SCALE_MAX}"
            )
        placements.append(
            PlacedGlyph(
                glyph_id=f"{category}:{local}",
                x=x,
                y=y,
                rot=rot,
                mirrored=bool(mirrored),
                scale=scale,
            )
        )

    for p in placements:
        if p.glyph_id not in catalog.glyphs:
            raise UnknownGlyphError(p.glyph_id)
    return Sign(canvas_w=w, canvas_h=h, placements=tuple(placements))
