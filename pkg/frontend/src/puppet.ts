/** The Puppet: a stylized figure whose body regions open anatomical
 * categories. Symbolic categories sit beside it as icon buttons showing a
 * representative glyph. In breadcrumb mode the figure shrinks to the top
 * left, a red square marks the active area, and every region stays
 * clickable so the user can switch areas without passing through home.
 */

import { CategoryInfo, GlyphJson } from "./api.js";
import { glyphThumb } from "./icons.js";
import { EditorController } from "./state.js";

const NS = "http://www.w3.org/2000/svg";

interface Region {
  token: string;
  /** Marker rectangle in puppet viewBox units. */
  box: [number, number, number, number];
  draw: (g: SVGElement) => void;
}

function shape(g: SVGElement, tag: string, attrs: Record<string, string>): void {
  const el = document.createElementNS(NS, tag);
  for (const [k, v] of Object.entries(attrs)) {
    el.setAttribute(k, v);
  }
  g.appendChild(el);
}

const BODY = { fill: "var(--puppet)", stroke: "none" };

/** Body regions for the catalog tokens the figure can show directly. */
const REGIONS: Region[] = [
  {
    token: "head",
    box: [35, 2, 30, 30],
    draw: (g) => shape(g, "circle", { ...BODY, cx: "50", cy: "17", r: "13" }),
  },
  {
    token: "face",
    box: [40, 8, 20, 18],
    draw: (g) => shape(g, "ellipse", { ...BODY, cx: "50", cy: "17", rx: "8", ry: "10" }),
  },
  {
    token: "shoulders",
    box: [28, 32, 44, 12],
    draw: (g) => shape(g, "rect", { ...BODY, x: "30", y: "34", width: "40", height: "8", rx: "4" }),
  },
  {
    token: "torso",
    box: [36, 42, 28, 34],
    draw: (g) => shape(g, "rect", { ...BODY, x: "38", y: "42", width: "24", height: "32", rx: "6" }),
  },
  {
    token: "arms",
    box: [16, 36, 68, 30],
    draw: (g) => {
      shape(g, "path", {
        fill: "none",
        stroke: "var(--puppet)",
        "stroke-width": "7",
        "stroke-linecap": "round",
        d: "M33 40 L22 62",
      });
      shape(g, "path", {
        fill: "none",
        stroke: "var(--puppet)",
        "stroke-width": "7",
        "stroke-linecap": "round",
        d: "M67 40 L78 62",
      });
    },
  },
  {
    token: "hands",
    box: [12, 62, 76, 16],
    draw: (g) => {
      shape(g, "circle", { ...BODY, cx: "21", cy: "68", r: "6" });
      shape(g, "circle", { ...BODY, cx: "79", cy: "68", r: "6" });
    },
  },
  {
    token: "legs",
    box: [36, 76, 28, 22],
    draw: (g) => {
      shape(g, "path", {
        fill: "none",
        stroke: "var(--puppet)",
        "stroke-width": "8",
        "stroke-linecap": "round",
        d: "M44 76 L42 94",
      });
      shape(g, "path", {
        fill: "none",
        stroke: "var(--puppet)",
        "stroke-width": "8",
        "stroke-linecap": "round",
        d: "M56 76 L58 94",
      });
    },
  },
];

const KNOWN = new Set(REGIONS.map((r) => r.token));

export function puppetSvg(
  categories: CategoryInfo[],
  active: string | null,
  onPick: (token: string) => void,
): SVGSVGElement {
  const anatomical = new Set(
    categories.filter((c) => c.kind === "anatomical").map((c) => c.token),
  );
  const svg = document.createElementNS(NS, "svg");
  svg.setAttribute("viewBox", "0 0 100 100");
  svg.classList.add("puppet");

  for (const region of REGIONS) {
    const g = document.createElementNS(NS, "g");
    g.classList.add("puppet-region");
    region.draw(g);
    if (anatomical.has(region.token)) {
      g.classList.add("clickable");
      g.setAttribute("role", "button");
      g.setAttribute("data-region", region.token);
      g.setAttribute("tabindex", "0");
      g.addEventListener("click", () => onPick(region.token));
    } else {
      g.classList.add("inert");
    }
    svg.appendChild(g);
  }

  if (active !== null && KNOWN.has(active)) {
    const region = REGIONS.find((r) => r.token === active);
    if (region !== undefined) {
      const [x, y, w, h] = region.box;
      const mark = document.createElementNS(NS, "rect");
      mark.classList.add("region-mark");
      mark.setAttribute("x", String(x));
      mark.setAttribute("y", String(y));
      mark.setAttribute("width", String(w));
      mark.setAttribute("height", String(h));
      mark.setAttribute("fill", "none");
      mark.setAttribute("stroke", "var(--mark)");
      mark.setAttribute("stroke-width", "2.5");
      mark.setAttribute("pointer-events", "none");
      svg.appendChild(mark);
    }
  }
  return svg;
}

/** Icon button for a category outside the figure (symbolic kinds, or
 * anatomical tokens the figure has no region for). */
export function categoryButton(
  category: CategoryInfo,
  representative: GlyphJson | undefined,
  active: boolean,
  onPick: (token: string) => void,
): HTMLButtonElement {
  const btn = document.createElement("button");
  btn.type = "button";
  btn.className = "category-btn";
  btn.dataset.category = category.token;
  if (active) {
    btn.classList.add("active");
  }
  if (representative !== undefined) {
    btn.appendChild(glyphThumb(representative.path, 34));
  } else {
    const dot = document.createElementNS(NS, "svg");
    dot.setAttribute("viewBox", "0 0 24 24");
    dot.setAttribute("width", "34");
    dot.setAttribute("height", "34");
    const c = document.createElementNS(NS, "circle");
    c.setAttribute("cx", "12");
    c.setAttribute("cy", "12");
    c.setAttribute("r", "6");
    c.setAttribute("fill", "currentColor");
    dot.appendChild(c);
    btn.appendChild(dot);
  }
  btn.addEventListener("click", () => onPick(category.token));
  return btn;
}

export function offFigureCategories(categories: CategoryInfo[]): CategoryInfo[] {
  return categories.filter((c) => c.kind !== "anatomical" || !KNOWN.has(c.token));
}
