#!/usr/bin/env python3
"""Regenerate the committed catalog fixtures and the shipped sample catalog.

Deterministic: running this twice produces byte-identical files. Outputs:

    tests/fixtures/fixture_cat.swc      small two-category test inventory
    tests/fixtures/fixture_corpus.swstore   4-sign co-occurrence corpus
    tests/fixtures/export_corpus.swstore    20-sign determinism corpus
    src/swiftsign/data/sample_catalog.swc   full six-area sample inventory
"""

from __future__ import annotations

import math
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

Point = tuple[float, float]


def fmt(v: float) -> str:
    r = round(v, 1)
    if r == int(r):
        return str(int(r))
    return f"{r:.1f}"


def rot_point(p: Point, steps: int) -> Point:
    """Rotate about (50,50) by steps*45 degrees, counter-clockwise on screen."""
    a = math.radians(45 * steps)
    c, s = math.cos(a), math.sin(a)
    x, y = p[0] - 50, p[1] - 50
    return (x * c + y * s + 50, -x * s + y * c + 50)


def mirror_point(p: Point) -> Point:
    return (100 - p[0], p[1])


def polyline(points: list[Point], close: bool = False) -> str:
    head = f"M {fmt(points[0][0])} {fmt(points[0][1])}"
    rest = " ".join(f"L {fmt(x)} {fmt(y)}" for x, y in points[1:])
    return f"{head} {rest}" + (" Z" if close else "")


def path_of(strokes: list[tuple[list[Point], bool]], rot: int = 0, mirrored: bool = False) -> str:
    parts = []
    for pts, close in strokes:
        if mirrored:
            pts = [mirror_point(p) for p in pts]
        pts = [rot_point(p, rot) for p in pts]
        parts.append(polyline(pts, close))
    return " ".join(parts)


# -- hand art: palm polygon + finger ticks + thumb notch --------------------

HAND_SHAPES = {
    "fist": [([(35.0, 40.0), (65.0, 40.0), (65.0, 70.0), (35.0, 70.0)], True)],
    "flat": [([(40.0, 25.0), (60.0, 25.0), (60.0, 75.0), (40.0, 75.0)], True)],
    "curl": [([(35.0, 65.0), (35.0, 40.0), (50.0, 30.0), (65.0, 40.0), (65.0, 65.0)], False)],
    "hook": [([(40.0, 70.0), (40.0, 40.0), (55.0, 30.0), (65.0, 40.0)], False)],
    "spread": [([(38.0, 70.0), (50.0, 35.0), (62.0, 70.0)], True)],
}


def hand_strokes(shape: str, fingers: int, right: bool) -> list[tuple[list[Point], bool]]:
    strokes = [(list(pts), close) for pts, close in HAND_SHAPES[shape]]
    x0, x1 = 38.0, 62.0
    for i in range(fingers):
        t = 0.5 if fingers == 1 else i / (fingers - 1)
        x = x0 + t * (x1 - x0)
        strokes.append(([(x, 38.0), (x, 22.0)], False))
    thumb_x = 68.0 if right else 32.0
    strokes.append(([(thumb_x, 52.0), (thumb_x + (6 if right else -6), 44.0)], False))
    return strokes


def fixture_hand_strokes(fingers: int, right: bool) -> list[tuple[list[Point], bool]]:
    return hand_strokes("fist", fingers, right)


HEAD_ART = {
    "brow": [([(35.0, 42.0), (50.0, 36.0), (65.0, 42.0)], False)],
    "eyes": [([(40.0, 48.0), (46.0, 48.0)], False), ([(54.0, 48.0), (60.0, 48.0)], False)],
    "nose": [([(50.0, 45.0), (47.0, 56.0), (53.0, 56.0)], False)],
    "mouth": [([(40.0, 62.0), (50.0, 66.0), (60.0, 62.0)], False)],
    "chin": [([(42.0, 72.0), (50.0, 76.0), (58.0, 72.0)], False)],
}

HEAD_RING = [([(50.0, 20.0), (75.0, 38.0), (66.0, 70.0), (34.0, 70.0), (25.0, 38.0)], True)]


def head_path(region: str, style_idx: int) -> str:
    strokes = [(list(p), c) for p, c in HEAD_RING]
    for pts, close in HEAD_ART[region]:
        shifted = [(x, y + 2.0 * style_idx) for x, y in pts]
        strokes.append((shifted, close))
    return path_of(strokes)


def emit_fixture_cat(out: Path) -> None:
    lines = [
        "# Test inventory: one hands glyph per facet combination, four head glyphs.",
        "CATALOG fixture-cat 1.0",
        'CATEGORY hands LABEL "Hands" KIND anatomical',
        'CATEGORY head LABEL "Head" KIND anatomical',
        'FACET hands handedness LABEL "Handedness" VALUES L,R',
        'FACET hands fingers LABEL "Fingers" VALUES 1,2,5',
        'FACET hands rotation LABEL "Rotation" VALUES 0,1,2,3,4,5,6,7',
        'FACET head region LABEL "Region" VALUES brow,mouth',
    ]
    for fingers in (1, 2, 5):
        for hand in ("L", "R"):
            for rot in range(8):
                gid = f"hands:h-{fingers}-{hand}-{rot}"
                base = f"hands:h-{fingers}-{hand}-0"
                art = path_of(fixture_hand_strokes(fingers, hand == "R"), rot=rot)
                lines.append(
                    f"GLYPH {gid} BASE {base} "
                    f"FACETS handedness={hand},fingers={fingers},rotation={rot} "
                    f'PATH "{art}"'
                )
    for region in ("brow", "mouth"):
        for style in ("a", "b"):
            gid = f"head:{region}-{style}"
            art = head_path(region, ord(style) - ord("a"))
            lines.append(f"GLYPH {gid} FACETS region={region} PATH \"{art}\"")
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")


# -- sample catalog ----------------------------------------------------------

SHOULDER_ART = {
    "raise": [([(25.0, 55.0), (50.0, 40.0), (75.0, 55.0)], False)],
    "drop": [([(25.0, 45.0), (50.0, 60.0), (75.0, 45.0)], False)],
    "hunch": [([(25.0, 50.0), (40.0, 38.0), (60.0, 38.0), (75.0, 50.0)], False)],
}

ARM_BEND = {
    "straight": [([(30.0, 70.0), (70.0, 30.0)], False)],
    "bent": [([(30.0, 70.0), (50.0, 50.0), (70.0, 60.0)], False)],
}

ARM_DIR_TICK = {
    "up": [(70.0, 30.0), (70.0, 18.0)],
    "forward": [(70.0, 30.0), (82.0, 30.0)],
    "side": [(70.0, 30.0), (80.0, 40.0)],
    "down": [(70.0, 30.0), (70.0, 42.0)],
}

PUNCT_ART = {
    "comma": [([(48.0, 60.0), (52.0, 64.0), (48.0, 72.0)], False)],
    "period": [([(46.0, 62.0), (54.0, 62.0), (54.0, 70.0), (46.0, 70.0)], True)],
    "question": [([(42.0, 40.0), (50.0, 32.0), (58.0, 40.0), (50.0, 50.0), (50.0, 58.0)], False)],
    "exclaim": [([(50.0, 30.0), (50.0, 56.0)], False), ([(47.0, 64.0), (53.0, 64.0), (53.0, 70.0), (47.0, 70.0)], True)],
    "pause": [([(42.0, 40.0), (42.0, 64.0)], False), ([(58.0, 40.0), (58.0, 64.0)], False)],
}

CONTACT_ART = {
    "touch": [([(40.0, 50.0), (60.0, 50.0)], False), ([(50.0, 40.0), (50.0, 60.0)], False)],
    "grasp": [([(35.0, 40.0), (50.0, 55.0), (65.0, 40.0)], False), ([(35.0, 60.0), (50.0, 45.0), (65.0, 60.0)], False)],
    "between": [([(38.0, 35.0), (38.0, 65.0)], False), ([(62.0, 35.0), (62.0, 65.0)], False), ([(45.0, 50.0), (55.0, 50.0)], False)],
    "strike": [([(30.0, 50.0), (60.0, 50.0)], False), ([(52.0, 42.0), (60.0, 50.0), (52.0, 58.0)], False)],
    "brush": [([(32.0, 58.0), (68.0, 42.0)], False), ([(38.0, 66.0), (74.0, 50.0)], False)],
    "rub": [([(32.0, 45.0), (68.0, 45.0)], False), ([(68.0, 55.0), (32.0, 55.0)], False), ([(32.0, 65.0), (68.0, 65.0)], False)],
}


def emit_sample_catalog(out: Path) -> None:
    lines = [
        "# Sample inventory covering the six standard areas; hands carries a",
        "# full 400-variant feature grid (5 shapes x 5 finger counts x 2 hands x 8 rotations).",
        "CATALOG sample-sw 1.0",
        'CATEGORY head LABEL "Head" KIND anatomical',
        'CATEGORY shoulders LABEL "Shoulders" KIND anatomical',
        'CATEGORY hands LABEL "Hands" KIND anatomical',
        'CATEGORY arms LABEL "Arms" KIND anatomical',
        'CATEGORY punctuation LABEL "Punctuation" KIND symbolic',
        'CATEGORY contact LABEL "Contact" KIND symbolic',
        'FACET head region LABEL "Region" VALUES brow,eyes,nose,mouth,chin',
        'FACET head style LABEL "Style" VALUES a,b,c',
        'FACET shoulders side LABEL "Side" VALUES left,right,both',
        'FACET shoulders motion LABEL "Motion" VALUES raise,drop,hunch',
        'FACET hands shape LABEL "Hand shape" VALUES fist,flat,curl,hook,spread',
        'FACET hands fingers LABEL "Fingers" VALUES 1,2,3,4,5',
        'FACET hands handedness LABEL "Handedness" VALUES L,R',
        'FACET hands rotation LABEL "Rotation" VALUES 0,1,2,3,4,5,6,7',
        'FACET arms side LABEL "Side" VALUES left,right',
        'FACET arms bend LABEL "Bend" VALUES straight,bent',
        'FACET arms direction LABEL "Direction" VALUES up,forward,side,down',
        'FACET punctuation mark LABEL "Mark" VALUES comma,period,question,exclaim,pause',
        'FACET contact kind LABEL "Kind" VALUES touch,grasp,between,strike,brush,rub',
    ]
    for region in ("brow", "eyes", "nose", "mouth", "chin"):
        for style in ("a", "b", "c"):
            gid = f"head:{region}-{style}"
            lines.append(
                f"GLYPH {gid} FACETS region={region},style={style} "
                f'PATH "{head_path(region, ord(style) - ord("a"))}"'
            )
    for side_idx, side in enumerate(("left", "right", "both")):
        for motion in ("raise", "drop", "hunch"):
            gid = f"shoulders:{side}-{motion}"
            strokes = [(list(p), c) for p, c in SHOULDER_ART[motion]]
            if side != "both":
                strokes.append(([(30.0 + 40.0 * side_idx, 62.0), (30.0 + 40.0 * side_idx, 72.0)], False))
            lines.append(
                f"GLYPH {gid} FACETS side={side},motion={motion} "
                f'PATH "{path_of(strokes)}"'
            )
    for shape in ("fist", "flat", "curl", "hook", "spread"):
        for fingers in range(1, 6):
            for hand in ("L", "R"):
                for rot in range(8):
                    gid = f"hands:{shape}-{fingers}-{hand}-{rot}"
                    base = f"hands:{shape}-{fingers}-R-0"
                    art = path_of(
                        hand_strokes(shape, fingers, hand == "R"),
                        rot=rot,
                        mirrored=(hand == "L"),
                    )
                    lines.append(
                        f"GLYPH {gid} BASE {base} "
                        f"FACETS shape={shape},fingers={fingers},handedness={hand},rotation={rot} "
                        f'PATH "{art}"'
                    )
    for side in ("left", "right"):
        for bend in ("straight", "bent"):
            for direction in ("up", "forward", "side", "down"):
                gid = f"arms:{side}-{bend}-{direction}"
                strokes = [(list(p), c) for p, c in ARM_BEND[bend]]
                strokes.append((list(ARM_DIR_TICK[direction]), False))
                art = path_of(strokes, mirrored=(side == "left"))
                lines.append(
                    f"GLYPH {gid} FACETS side={side},bend={bend},direction={direction} "
                    f'PATH "{art}"'
                )
    for mark, strokes in PUNCT_ART.items():
        lines.append(
            f"GLYPH punctuation:{mark} FACETS mark={mark} PATH \"{path_of(strokes)}\""
        )
    for kind, strokes in CONTACT_ART.items():
        lines.append(
            f"GLYPH contact:{kind} FACETS kind={kind} PATH \"{path_of(strokes)}\""
        )
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")


# -- corpora -----------------------------------------------------------------


def swt(canvas: tuple[int, int], placements: list[tuple[str, int, int, int, int, int]]) -> str:
    parts = [f"SWIFT1;C{canvas[0]}x{canvas[1]}"]
    for gid, x, y, rot, mir, scale in placements:
        parts.append(f"G{gid}@{x},{y}r{rot}m{mir}s{scale}")
    return ";".join(parts)


def emit_fixture_corpus(out: Path) -> None:
    # Base families: A=hands:h-1-L-0, B=hands:h-2-R-0, X=head:brow-a, Y=head:mouth-a.
    # S2 and S4 place rotated members of the A family so base reduction matters.
    signs = [
        [("hands:h-1-L-0", 200, 150, 0, 0, 1000), ("head:brow-a", 250, 60, 0, 0, 1000)],
        [("hands:h-1-L-3", 210, 160, 0, 0, 1000), ("head:brow-a", 250, 65, 0, 0, 1000)],
        [("hands:h-2-R-0", 220, 170, 0, 0, 1000), ("head:mouth-a", 250, 70, 0, 0, 1000)],
        [("hands:h-1-L-5", 230, 180, 0, 0, 1000), ("head:mouth-a", 240, 75, 0, 0, 1000)],
    ]
    lines = []
    for i, placements in enumerate(signs, start=1):
        ts = f"2026-01-01T00:00:{i - 1:02d}Z"
        lines.append(f"{i:08d} {ts} {swt((500, 500), placements)}")
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")


def emit_export_corpus(out: Path) -> None:
    rng = random.Random(20260819)
    hands = [f"hands:h-{f}-{h}-{r}" for f in (1, 2, 5) for h in ("L", "R") for r in range(8)]
    heads = [f"head:{region}-{s}" for region in ("brow", "mouth") for s in ("a", "b")]
    pool = hands + heads
    lines = []
    for i in range(1, 21):
        n = rng.randint(0, 6)
        placements = []
        for _ in range(n):
            placements.append(
                (
                    rng.choice(pool),
                    rng.randint(0, 500),
                    rng.randint(0, 500),
                    rng.randint(0, 7),
                    rng.randint(0, 1),
                    rng.randint(100, 4000),
                )
            )
        ts = f"2026-01-02T00:{(i - 1) // 60:02d}:{(i - 1) % 60:02d}Z"
        label = f' L"export sample {i}"' if i % 5 == 0 else ""
        lines.append(f"{i:08d} {ts} {swt((500, 500), placements)}{label}")
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")


def main() -> None:
    fixtures = ROOT / "tests" / "fixtures"
    fixtures.mkdir(parents=True, exist_ok=True)
    data = ROOT / "src" / "swiftsign" / "data"
    data.mkdir(parents=True, exist_ok=True)
    emit_fixture_cat(fixtures / "fixture_cat.swc")
    emit_fixture_corpus(fixtures / "fixture_corpus.swstore")
    emit_export_corpus(fixtures / "export_corpus.swstore")
    emit_sample_catalog(data / "sample_catalog.swc")
    print("regenerated fixture_cat.swc, fixture_corpus.swstore, export_corpus.swstore, sample_catalog.swc")


if __name__ == "__main__":
    main()
