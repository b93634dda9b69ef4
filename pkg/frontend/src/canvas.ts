/** Sign Display: the interactive canvas plus its clear/save side buttons.
 *
 * Placements stay draggable after insertion; click selects, shift-click
 * and marquee multi-select, dragging moves the whole selection. A
 * rejected op flashes the border and leaves the picture untouched.
 */

import { icon } from "./icons.js";
import { EditorController } from "./state.js";

const NS = "http://www.w3.org/2000/svg";

/** Pointer gesture in progress; coordinates in canvas units. */
interface Gesture {
  kind: "move" | "marquee";
  startX: number;
  startY: number;
  lastX: number;
  lastY: number;
  index: number;
  moved: boolean;
  shift: boolean;
  wasSelected: boolean;
}

export function setupCanvas(root: HTMLElement, controller: EditorController): void {
  root.classList.add("sign-display");

  const stage = document.createElement("div");
  stage.className = "canvas-stage";
  const svg = document.createElementNS(NS, "svg");
  svg.classList.add("sign-canvas");
  svg.dataset.role = "sign-canvas";
  stage.appendChild(svg);

  const side = document.createElement("div");
  side.className = "canvas-side";
  const clearBtn = document.createElement("button");
  clearBtn.type = "button";
  clearBtn.dataset.action = "clear";
  clearBtn.appendChild(icon("clear"));
  clearBtn.addEventListener("click", () => {
    void controller.clearSign();
  });
  const saveBtn = document.createElement("button");
  saveBtn.type = "button";
  saveBtn.dataset.action = "open-save";
  saveBtn.appendChild(icon("save"));
  saveBtn.addEventListener("click", () => {
    controller.openSavePopup();
  });
  side.append(clearBtn, saveBtn);

  root.append(stage, side);

  let gesture: Gesture | null = null;
  let lastFlash = 0;

  const toCanvas = (clientX: number, clientY: number): [number, number] => {
    const rect = svg.getBoundingClientRect();
    const { sign } = controller.state;
    const w = rect.width || sign.canvas_w;
    const h = rect.height || sign.canvas_h;
    return [
      ((clientX - rect.left) * sign.canvas_w) / w,
      ((clientY - rect.top) * sign.canvas_h) / h,
    ];
  };

  svg.addEventListener("dragover", (e) => {
    e.preventDefault();
  });

  svg.addEventListener("drop", (e) => {
    e.preventDefault();
    const payload =
      controller.state.dragPayload ??
      (e as DragEvent).dataTransfer?.getData("text/glyph-id") ??
      null;
    if (payload === null || payload === "") {
      return;
    }
    const [x, y] = toCanvas(e.clientX, e.clientY);
    void controller.dropGlyph(payload, x, y);
  });

  svg.addEventListener("pointerdown", (e) => {
    const target = e.target as Element | null;
    const group = target?.closest?.("[data-index]") ?? null;
    const [x, y] = toCanvas(e.clientX, e.clientY);
    if (group !== null) {
      const index = Number(group.getAttribute("data-index"));
      const wasSelected = controller.state.selection.includes(index);
      gesture = {
        kind: "move",
        startX: x,
        startY: y,
        lastX: x,
        lastY: y,
        index,
        moved: false,
        shift: e.shiftKey,
        wasSelected,
      };
      if (!wasSelected) {
        void controller.clickPlacement(index, e.shiftKey);
      }
    } else {
      gesture = {
        kind: "marquee",
        startX: x,
        startY: y,
        lastX: x,
        lastY: y,
        index: -1,
        moved: false,
        shift: e.shiftKey,
        wasSelected: false,
      };
      controller.setMarquee({ x0: x, y0: y, x1: x, y1: y });
    }
  });

  const onPointerMove = (e: PointerEvent | MouseEvent): void => {
    if (gesture === null) {
      return;
    }
    const [x, y] = toCanvas(e.clientX, e.clientY);
    gesture.lastX = x;
    gesture.lastY = y;
    if (Math.abs(x - gesture.startX) > 2 || Math.abs(y - gesture.startY) > 2) {
      gesture.moved = true;
    }
    if (gesture.kind === "marquee") {
      controller.setMarquee({ x0: gesture.startX, y0: gesture.startY, x1: x, y1: y });
    } else if (gesture.moved) {
      render();
    }
  };

  const onPointerUp = (): void => {
    if (gesture === null) {
      return;
    }
    const g = gesture;
    gesture = null;
    if (g.kind === "marquee") {
      controller.setMarquee(null);
      void controller.marqueeSelect(g.startX, g.startY, g.lastX, g.lastY);
      return;
    }
    if (g.moved) {
      void controller.moveSelection(g.lastX - g.startX, g.lastY - g.startY);
    } else if (g.wasSelected) {
      void controller.clickPlacement(g.index, g.shift);
    } else {
      render();
    }
  };

  window.addEventListener("pointermove", onPointerMove);
  window.addEventListener("pointerup", onPointerUp);

  function render(): void {
    const { sign, selection, marquee, flash } = controller.state;
    svg.setAttribute("viewBox", `0 0 ${sign.canvas_w} ${sign.canvas_h}`);
    while (svg.firstChild) {
      svg.removeChild(svg.firstChild);
    }

    const selected = new Set(selection);
    const previewDx = gesture?.kind === "move" && gesture.moved ? gesture.lastX - gesture.startX : 0;
    const previewDy = gesture?.kind === "move" && gesture.moved ? gesture.lastY - gesture.startY : 0;

    sign.placements.forEach((p, i) => {
      const glyph = controller.glyph(p.glyph_id);
      const group = document.createElementNS(NS, "g");
      group.setAttribute("data-index", String(i));
      group.classList.add("placement");
      if (selected.has(i)) {
        group.classList.add("selected");
      }
      const px = selected.has(i) ? p.x + previewDx : p.x;
      const py = selected.has(i) ? p.y + previewDy : p.y;
      const inner = document.createElementNS(NS, "g");
      const rot = -45 * p.rot;
      const sx = (p.mirrored ? -p.scale : p.scale) / 1000;
      const sy = p.scale / 1000;
      if (glyph !== undefined) {
        inner.setAttribute(
          "transform",
          `translate(${px} ${py}) rotate(${rot}) scale(${sx} ${sy}) ` +
            `translate(${-glyph.anchor[0]} ${-glyph.anchor[1]})`,
        );
        const path = document.createElementNS(NS, "path");
        path.setAttribute("d", glyph.path);
        path.setAttribute("fill", "none");
        path.setAttribute("stroke", "currentColor");
        path.setAttribute("stroke-width", "2");
        inner.appendChild(path);
        const hit = document.createElementNS(NS, "rect");
        hit.setAttribute("x", "0");
        hit.setAttribute("y", "0");
        hit.setAttribute("width", "100");
        hit.setAttribute("height", "100");
        hit.setAttribute("fill", "transparent");
        hit.setAttribute("stroke", "none");
        inner.appendChild(hit);
      } else {
        // Geometry not cached yet: mark the anchor so the spot stays usable.
        inner.setAttribute("transform", `translate(${px} ${py})`);
        const dot = document.createElementNS(NS, "circle");
        dot.setAttribute("r", "6");
        dot.setAttribute("fill", "currentColor");
        inner.appendChild(dot);
      }
      group.appendChild(inner);
      group.appendChild(anchorMark(px, py, selected.has(i)));
      svg.appendChild(group);
    });

    if (marquee !== null) {
      const rect = document.createElementNS(NS, "rect");
      rect.classList.add("marquee");
      rect.setAttribute("x", String(Math.min(marquee.x0, marquee.x1)));
      rect.setAttribute("y", String(Math.min(marquee.y0, marquee.y1)));
      rect.setAttribute("width", String(Math.abs(marquee.x1 - marquee.x0)));
      rect.setAttribute("height", String(Math.abs(marquee.y1 - marquee.y0)));
      svg.appendChild(rect);
    }

    if (flash !== lastFlash) {
      lastFlash = flash;
      stage.classList.remove("flash");
      // Reflow restarts the border animation on consecutive rejections.
      void stage.offsetWidth;
      stage.classList.add("flash");
    }
  }

  function anchorMark(x: number, y: number, isSelected: boolean): SVGElement {
    const dot = document.createElementNS(NS, "circle");
    dot.setAttribute("cx", String(x));
    dot.setAttribute("cy", String(y));
    dot.setAttribute("r", "3");
    dot.setAttribute("fill", isSelected ? "var(--accent)" : "transparent");
    dot.setAttribute("pointer-events", "none");
    return dot;
  }

  controller.subscribe(render);
  render();
}
