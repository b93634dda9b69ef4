"""Sign document model: placed glyphs on a canvas, multi-select edits.

Everything here is a value: operations return new Sign instances and never
mutate their input, so snapshots are free and concurrent readers are safe.
Placement order is z-order (later on top); no operation except delete
reorders survivors.

Transform order for a placement, applied to glyph-local coordinates:
scale, then mirror (horizontal flip), then rotate (counter-clockwise
45-degree steps), all about the glyph's anchor, then translate so the
anchor lands on (x, y). Export correctness depends on this exact order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Literal

from .catalog import ART_BOX, Catalog
from .errors import InvalidSelectionError, OutOfCanvasError, PlacementRangeError

ROT_STEPS = 8
SCALE_MIN = 100
SCALE_MAX = 4000

# cos/sin of k*45deg with exact 0/1 entries, so even-step rotations
# produce exact integer boxes.
_R = math.sqrt(0.5)
_COS8 = (1.0, _R, 0.0, -_R, -1.0, -_R, 0.0, _R)
_SIN8 = (0.0, _R, 1.0, _R, 0.0, -_R, -1.0, -_R)


@dataclass(frozen=True)
class PlacedGlyph:
    """One glyph on the canvas: anchor position, orientation, scale.

    ``rot`` counts counter-clockwise 45-degree steps (0..7); ``mirrored``
    is a horizontal flip about the anchor, applied before rotation;
    ``scale`` is per-mille of natural size (1000 = natural).
    """

    glyph_id: str
    x: int
    y: int
    rot: int = 0
    mirrored: bool = False
    scale: int = 1000

    def __post_init__(self):
        if not 0 <= self.rot < ROT_STEPS:
            raise PlacementRangeError(f"rot {self.rot} outside 0..{ROT_STEPS - 1}")
        if not SCALE_MIN <= self.scale <= SCALE_MAX:
            raise PlacementRangeError(
                f"scale {self.scale} outside {SCALE_MIN}..{SCALE_MAX}"
            )


@dataclass(frozen=True)
class Sign:
    """An ordered collection of placements on a fixed canvas.

    ``id`` is store-assigned on save and empty before; placement order is
    insertion order and z-order.
    """

    canvas_w: int = 500
    canvas_h: int = 500
    placements: tuple[PlacedGlyph, ...] = ()
    id: str = ""
    label: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "placements", tuple(self.placements))
        if self.canvas_w < 1 or self.canvas_h < 1:
            raise PlacementRangeError(
                f"canvas {self.canvas_w}x{self.canvas_h} must be at least 1x1"
            )
        for i, p in enumerate(self.placements):
            if not _within(self, p.x, p.y):
                raise OutOfCanvasError(
                    f"placement {i} anchor ({p.x},{p.y}) outside canvas "
                    f"{self.canvas_w}x{self.canvas_h}"
                )


Selection = frozenset[int]


@dataclass(frozen=True)
class Box:
    """Axis-aligned rectangle in integer canvas units (min/max corners)."""

    min_x: int
    min_y: int
    max_x: int
    max_y: int

    @property
    def width(self) -> int:
        return self.max_x - self.min_x

    @property
    def height(self) -> int:
        return self.max_y - self.min_y


def _within(sign: Sign, x: int, y: int) -> bool:
    # Anchors are points on the closed canvas [0,w] x [0,h].
    return 0 <= x <= sign.canvas_w and 0 <= y <= sign.canvas_h


def normalize_selection(sign: Sign, sel: Iterable[int]) -> Selection:
    """Validate indices against the sign; raises InvalidSelectionError."""
    indices = frozenset(sel)
    for i in indices:
        if not isinstance(i, int) or isinstance(i, bool):
            raise InvalidSelectionError(f"selection index {i!r} is not an integer")
        if not 0 <= i < len(sign.placements):
            raise InvalidSelectionError(
                f"selection index {i} outside 0..{len(sign.placements) - 1}"
            )
    return indices


def add_glyph(sign: Sign, catalog: Catalog, glyph_id: str, x: int, y: int) -> Sign:
    """Append a placement (rot 0, unmirrored, natural scale) at (x, y)."""
    catalog.get_glyph(glyph_id)
    if not _within(sign, x, y):
        raise OutOfCanvasError(
            f"({x},{y}) outside canvas {sign.canvas_w}x{sign.canvas_h}"
        )
    placed = PlacedGlyph(glyph_id=glyph_id, x=x, y=y)
    return replace(sign, placements=sign.placements + (placed,))


def move(sign: Sign, sel: Iterable[int], dx: int, dy: int) -> Sign:
    """Translate every selected placement; rejected atomically if any
    moved anchor would leave the canvas."""
    indices = normalize_selection(sign, sel)
    for i in indices:
        p = sign.placements[i]
        if not _within(sign, p.x + dx, p.y + dy):
            raise OutOfCanvasError(
                f"moving placement {i} to ({p.x + dx},{p.y + dy}) leaves the canvas"
            )
    placements = tuple(
        replace(p, x=p.x + dx, y=p.y + dy) if i in indices else p
        for i, p in enumerate(sign.placements)
    )
    return replace(sign, placements=placements)


def rotate(sign: Sign, sel: Iterable[int], direction: Literal["cw", "ccw"]) -> Sign:
    """Step every selected placement's rotation by 45 degrees."""
    if direction not in ("cw", "ccw"):
        raise InvalidSelectionError(f"direction must be 'cw' or 'ccw', got {direction!r}")
    indices = normalize_selection(sign, sel)
    step = 1 if direction == "ccw" else -1
    placements = tuple(
        replace(p, rot=(p.rot + step) % ROT_STEPS) if i in indices else p
        for i, p in enumerate(sign.placements)
    )
    return replace(sign, placements=placements)


def mirror(sign: Sign, sel: Iterable[int]) -> Sign:
    """Toggle the horizontal flip of every selected placement."""
    indices = normalize_selection(sign, sel)
    placements = tuple(
        replace(p, mirrored=not p.mirrored) if i in indices else p
        for i, p in enumerate(sign.placements)
    )
    return replace(sign, placements=placements)


def delete(sign: Sign, sel: Iterable[int]) -> Sign:
    """Remove selected placements; survivors keep their relative order."""
    indices = normalize_selection(sign, sel)
    placements = tuple(p for i, p in enumerate(sign.placements) if i not in indices)
    return replace(sign, placements=placements)


def clear(sign: Sign) -> Sign:
    """Empty the canvas; size and label are retained."""
    return replace(sign, placements=())


def transform_point(p: PlacedGlyph, anchor: tuple[int, int], u: float, v: float) -> tuple[float, float]:
    """Map a glyph-local point through a placement's full transform."""
    du = (u - anchor[0]) * (p.scale / 1000.0)
    dv = (v - anchor[1]) * (p.scale / 1000.0)
    if p.mirrored:
        du = -du
    c, s = _COS8[p.rot], _SIN8[p.rot]
    # Screen coordinates (+y down): counter-clockwise rotation matrix.
    rx = du * c + dv * s
    ry = -du * s + dv * c
    return (p.x + rx, p.y + ry)


def bounding_box(sign: Sign, catalog: Catalog) -> Box:
    """Tightest integer rectangle containing every transformed art box.

    A glyph's drawing extent is its full 100x100 local unit box;
    fractional extents (odd rotation steps) round outward.
    """
    if not sign.placements:
        return Box(0, 0, 0, 0)
    min_x = min_y = math.inf
    max_x = max_y = -math.inf
    corners = ((0.0, 0.0), (ART_BOX, 0.0), (ART_BOX, ART_BOX), (0.0, ART_BOX))
    for p in sign.placements:
        anchor = catalog.get_glyph(p.glyph_id).anchor
        for u, v in corners:
            cx, cy = transform_point(p, anchor, u, v)
            min_x = min(min_x, cx)
            min_y = min(min_y, cy)
            max_x = max(max_x, cx)
            max_y = max(max_y, cy)
    return Box(
        math.floor(min_x), math.floor(min_y), math.ceil(max_x), math.ceil(max_y)
    )
