"""Deterministic SVG rendering of a composed sign.

Equal inputs yield byte-identical documents: attributes are emitted in a
fixed order, numbers through fixed integer/scale formatters, one group per
placement in z-order. Each group applies the document model's transform
order (scale, mirror, rotate about the anchor, translate), expressed as an
SVG transform list; SVG's rotate() is clockwise-positive on screen, so
counter-clockwise steps emit negative angles.
"""

from __future__ import annotations

from .catalog import Catalog
from .sign import Sign, bounding_box


def _fmt_scale(permille: int) -> str:
    """Exact decimal for a per-mille factor: 1000 -> '1', 1250 -> '1.25'."""
    sign = "-" if permille < 0 else ""
    mag = abs(permille)
    whole, frac = divmod(mag, 1000)
    if frac == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}." + f"{frac:03d}".rstrip("0")


def placement_transform(x: int, y: int, rot: int, mirrored: bool, scale: int, anchor: tuple[int, int]) -> str:
    sx = _fmt_scale(-scale if mirrored else scale)
    sy = _fmt_scale(scale)
    return (
        f"translate({x} {y}) rotate({-45 * rot}) "
        f"scale({sx} {sy}) translate({-anchor[0]} {-anchor[1]})"
    )


def export_svg(sign: Sign, catalog: Catalog, crop: bool = False) -> str:
    """Render the sign; crop=True tightens the viewBox to the content box."""
    if crop:
        box = bounding_box(sign, catalog)
        width, height = box.width, box.height
        view = f"{box.min_x} {box.min_y} {width} {height}"
    else:
        width, height = sign.canvas_w, sign.canvas_h
        view = f"0 0 {width} {height}"

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="{view}">'
    ]
    for p in sign.placements:
        glyph = catalog.get_glyph(p.glyph_id)
        transform = placement_transform(p.x, p.y, p.rot, p.mirrored, p.scale, glyph.anchor)
        lines.append(
            f'  <g data-glyph="{glyph.id}" transform="{transform}">'
            f'<path d="{glyph.path}" fill="none" stroke="#000" stroke-width="2"/>'
            f"</g>"
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
