/** Inline SVG icons. No text nodes anywhere: every control stays icon-only
 * and the mouseover animations (CSS, .anim group) preview the action.
 */

const NS = "http://www.w3.org/2000/svg";

function svg(size: number, viewBox: string): SVGSVGElement {
  const el = document.createElementNS(NS, "svg");
  el.setAttribute("viewBox", viewBox);
  el.setAttribute("width", String(size));
  el.setAttribute("height", String(size));
  el.setAttribute("aria-hidden", "true");
  return el;
}

function child(parent: Element, tag: string, attrs: Record<string, string>): SVGElement {
  const el = document.createElementNS(NS, tag);
  for (const [k, v] of Object.entries(attrs)) {
    el.setAttribute(k, v);
  }
  parent.appendChild(el);
  return el;
}

export type IconName =
  | "home"
  | "retry"
  | "error"
  | "delete"
  | "rotate-cw"
  | "rotate-ccw"
  | "mirror"
  | "clear"
  | "save"
  | "chevron-up"
  | "chevron-down";

export function icon(name: IconName, size = 24): SVGSVGElement {
  const el = svg(size, "0 0 24 24");
  el.classList.add("icon", `icon-${name}`);
  const stroke = {
    fill: "none",
    stroke: "currentColor",
    "stroke-width": "2",
    "stroke-linecap": "round",
    "stroke-linejoin": "round",
  };
  switch (name) {
    case "home": {
      child(el, "path", { ...stroke, d: "M4 11 L12 4 L20 11 V20 H14 V15 H10 V20 H4 Z" });
      break;
    }
    case "retry": {
      child(el, "path", { ...stroke, d: "M19 12 A7 7 0 1 1 14 5.3" });
      child(el, "path", { ...stroke, d: "M14 2 L14.5 5.8 L10.8 6.6" });
      break;
    }
    case "error": {
      child(el, "path", { ...stroke, d: "M12 3 L22 20 H2 Z" });
      child(el, "line", { ...stroke, x1: "12", y1: "9", x2: "12", y2: "14" });
      child(el, "circle", { fill: "currentColor", cx: "12", cy: "17", r: "1.3" });
      break;
    }
    case "delete": {
      const g = child(el, "g", { class: "anim" });
      child(g, "path", { ...stroke, d: "M6 7 L7 20 H17 L18 7" });
      child(g, "line", { ...stroke, x1: "4", y1: "7", x2: "20", y2: "7" });
      child(g, "path", { ...stroke, d: "M9 7 V4 H15 V7" });
      break;
    }
    case "rotate-cw": {
      child(el, "path", { ...stroke, d: "M5 12 A7 7 0 1 1 10 18.7" });
      child(el, "path", { ...stroke, d: "M10 22 L9.5 18.2 L13.2 17.4" });
      child(el, "rect", {
        class: "anim",
        x: "9",
        y: "9",
        width: "6",
        height: "6",
        fill: "currentColor",
      });
      break;
    }
    case "rotate-ccw": {
      child(el, "path", { ...stroke, d: "M19 12 A7 7 0 1 0 14 18.7" });
      child(el, "path", { ...stroke, d: "M14 22 L14.5 18.2 L10.8 17.4" });
      child(el, "rect", {
        class: "anim",
        x: "9",
        y: "9",
        width: "6",
        height: "6",
        fill: "currentColor",
      });
      break;
    }
    case "mirror": {
      child(el, "line", { ...stroke, "stroke-dasharray": "2 2", x1: "12", y1: "3", x2: "12", y2: "21" });
      child(el, "path", { fill: "currentColor", d: "M10 7 L10 17 L4 17 Z" });
      child(el, "path", {
        class: "anim",
        fill: "currentColor",
        opacity: "0.45",
        d: "M14 7 L14 17 L20 17 Z",
      });
      break;
    }
    case "clear": {
      const g = child(el, "g", { class: "anim" });
      child(g, "line", { ...stroke, x1: "5", y1: "5", x2: "19", y2: "19" });
      child(g, "line", { ...stroke, x1: "19", y1: "5", x2: "5", y2: "19" });
      break;
    }
    case "save": {
      const g = child(el, "g", { class: "anim" });
      child(g, "path", { ...stroke, d: "M12 3 V13" });
      child(g, "path", { ...stroke, d: "M8 9 L12 13 L16 9" });
      child(el, "path", { ...stroke, d: "M4 15 V19 H20 V15" });
      break;
    }
    case "chevron-up": {
      child(el, "path", { ...stroke, d: "M5 15 L12 8 L19 15" });
      break;
    }
    case "chevron-down": {
      child(el, "path", { ...stroke, d: "M5 9 L12 16 L19 9" });
      break;
    }
  }
  return el;
}

/** A glyph drawn into a small tile, reusing the catalog's 100x100 art box. */
export function glyphThumb(path: string, size = 40): SVGSVGElement {
  const el = svg(size, "0 0 100 100");
  el.classList.add("glyph-thumb");
  child(el, "path", {
    d: path,
    fill: "none",
    stroke: "currentColor",
    "stroke-width": "6",
    "stroke-linecap": "round",
    "stroke-linejoin": "round",
  });
  return el;
}
