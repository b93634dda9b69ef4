/** Hint Panel: the collapsible bottom band. Minimized (the default) it
 * shows only the number of compatible glyphs; expanded it lists them,
 * ranked, draggable onto the canvas like any search result. Hidden until
 * an area has been explored; an API failure shows the error glyph instead
 * of a stale number.
 */

import { glyphThumb, icon } from "./icons.js";
import { EditorController } from "./state.js";

export function setupHintPanel(root: HTMLElement, controller: EditorController): void {
  root.classList.add("hint-panel");

  function render(): void {
    const { lastArea, hints, hintsError, hintsExpanded } = controller.state;
    root.replaceChildren();

    if (lastArea === null && !hintsError) {
      root.classList.add("hidden");
      return;
    }
    root.classList.remove("hidden");

    const toggle = document.createElement("button");
    toggle.type = "button";
    toggle.dataset.action = "toggle-hints";
    toggle.className = "hint-toggle";
    toggle.appendChild(icon(hintsExpanded ? "chevron-down" : "chevron-up", 20));

    if (hintsError) {
      const err = document.createElement("span");
      err.className = "hint-error";
      err.dataset.role = "hint-error";
      err.appendChild(icon("error", 20));
      toggle.appendChild(err);
    } else {
      const badge = document.createElement("span");
      badge.className = "hint-badge";
      badge.dataset.role = "hint-badge";
      badge.textContent = hints === null ? "0" : String(hints.hint_count);
      toggle.appendChild(badge);
    }
    toggle.addEventListener("click", () => {
      controller.toggleHints();
    });
    root.appendChild(toggle);

    if (!hintsExpanded || hints === null) {
      return;
    }

    const strip = document.createElement("div");
    strip.className = "hint-strip";
    strip.dataset.role = "hint-strip";
    for (const h of hints.hints) {
      const tile = document.createElement("div");
      tile.className = "glyph-tile hint-tile";
      tile.dataset.glyphId = h.glyph.id;
      tile.dataset.score = String(h.score);
      tile.draggable = true;
      tile.appendChild(glyphThumb(h.glyph.path, 44));
      const score = document.createElement("span");
      score.className = "hint-score";
      score.textContent = String(h.score);
      tile.appendChild(score);
      tile.addEventListener("dragstart", (e) => {
        controller.startDrag(h.glyph.id);
        e.dataTransfer?.setData("text/glyph-id", h.glyph.id);
      });
      tile.addEventListener("dragend", () => {
        controller.endDrag();
      });
      strip.appendChild(tile);
    }
    root.appendChild(strip);
  }

  controller.subscribe(render);
  render();
}
