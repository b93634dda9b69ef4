/** Glyph Menu: home screen with the full Puppet and category buttons; after
 * a choice, breadcrumb Puppet + Choose Boxes + result panel.
 *
 * Choose Boxes are picture-driven: each value tile shows a representative
 * glyph for that value plus the count of glyphs left if picked, so no
 * control needs a word. Once any value is picked the untouched boxes
 * collapse to a compact row, leaving room for the results.
 */

import { FacetInfo } from "./api.js";
import { glyphThumb, icon } from "./icons.js";
import { categoryButton, offFigureCategories, puppetSvg } from "./puppet.js";
import { EditorController } from "./state.js";

export function setupMenu(root: HTMLElement, controller: EditorController): void {
  root.classList.add("glyph-menu");

  const pick = (token: string): void => {
    void controller.chooseCategory(token);
  };

  let iconsRequested = false;

  function render(): void {
    const { categories, category, schema, facets, results, menuError } = controller.state;
    root.replaceChildren();

    if (menuError) {
      const errBox = document.createElement("div");
      errBox.className = "menu-error";
      errBox.dataset.role = "menu-error";
      errBox.appendChild(icon("error", 36));
      const retry = document.createElement("button");
      retry.type = "button";
      retry.dataset.action = "retry";
      retry.appendChild(icon("retry"));
      retry.addEventListener("click", () => {
        if (controller.state.sessionId === null) {
          void controller.retryInit();
        } else if (category !== null) {
          void controller.chooseCategory(category);
        } else {
          void controller.retryInit();
        }
      });
      errBox.appendChild(retry);
      root.appendChild(errBox);
      return;
    }

    if (!iconsRequested && categories.length > 0) {
      iconsRequested = true;
      void controller.loadCategoryIcons(offFigureCategories(categories).map((c) => c.token));
    }

    if (category === null) {
      renderHome();
    } else if (schema !== null) {
      renderCategory(schema.facets, facets);
    }

    if (results !== null && category !== null) {
      root.appendChild(renderResults());
    }
  }

  function renderHome(): void {
    const { categories } = controller.state;
    const home = document.createElement("div");
    home.className = "menu-home";
    home.dataset.role = "menu-home";

    // The home screen deliberately shows no glyphs; the pulsing halo on the
    // Puppet is the visual prompt to pick a body area first.
    const prompt = document.createElement("div");
    prompt.className = "puppet-prompt";
    prompt.dataset.role = "puppet-prompt";
    prompt.appendChild(puppetSvg(categories, null, pick));
    home.appendChild(prompt);

    const extra = offFigureCategories(categories);
    if (extra.length > 0) {
      const row = document.createElement("div");
      row.className = "category-row";
      for (const c of extra) {
        row.appendChild(categoryButton(c, controller.categoryIcon(c.token), false, pick));
      }
      home.appendChild(row);
    }
    root.appendChild(home);
  }

  function renderCategory(facetInfos: FacetInfo[], active: Record<string, string>): void {
    const { categories, category } = controller.state;
    const head = document.createElement("div");
    head.className = "menu-breadcrumb";

    const homeBtn = document.createElement("button");
    homeBtn.type = "button";
    homeBtn.dataset.action = "home";
    homeBtn.appendChild(icon("home"));
    homeBtn.addEventListener("click", () => {
      controller.goHome();
    });
    head.appendChild(homeBtn);

    const crumb = document.createElement("div");
    crumb.className = "breadcrumb-puppet";
    crumb.dataset.role = "breadcrumb";
    crumb.appendChild(puppetSvg(categories, category, pick));
    head.appendChild(crumb);

    const extra = offFigureCategories(categories);
    if (extra.length > 0) {
      const row = document.createElement("div");
      row.className = "category-row compact";
      for (const c of extra) {
        row.appendChild(
          categoryButton(c, controller.categoryIcon(c.token), c.token === category, pick),
        );
      }
      head.appendChild(row);
    }
    root.appendChild(head);

    const anyPicked = Object.keys(active).length > 0;
    const boxes = document.createElement("div");
    boxes.className = "choose-boxes";
    for (const facet of facetInfos) {
      boxes.appendChild(renderBox(facet, active, anyPicked));
    }
    root.appendChild(boxes);
  }

  function renderBox(
    facet: FacetInfo,
    active: Record<string, string>,
    anyPicked: boolean,
  ): HTMLElement {
    const { category, results } = controller.state;
    const box = document.createElement("div");
    box.className = "choose-box";
    box.dataset.facet = facet.name;
    const picked = active[facet.name];
    // A picked box stays open to show its highlighted value; untouched
    // boxes collapse once any choice exists, leaving room for results.
    if (anyPicked && picked === undefined) {
      box.classList.add("compact");
    }
    const counts = results?.remaining_counts[facet.name] ?? {};

    for (const value of facet.values) {
      const tile = document.createElement("button");
      tile.type = "button";
      tile.className = "facet-value";
      tile.dataset.facet = facet.name;
      tile.dataset.value = value;
      if (picked === value) {
        tile.classList.add("selected");
      }
      const remaining = counts[value] ?? 0;
      if (remaining === 0 && picked !== value) {
        tile.disabled = true;
      }
      const rep =
        category !== null ? controller.representative(category, facet.name, value) : undefined;
      if (rep !== undefined) {
        tile.appendChild(glyphThumb(rep.path, 34));
      }
      const count = document.createElement("span");
      count.className = "value-count";
      count.textContent = String(remaining);
      tile.appendChild(count);
      tile.addEventListener("click", () => {
        void controller.setFacet(facet.name, value);
      });
      box.appendChild(tile);
    }
    return box;
  }

  function renderResults(): HTMLElement {
    const { results } = controller.state;
    const panel = document.createElement("div");
    panel.className = "result-panel";
    panel.dataset.role = "results";
    if (results === null) {
      return panel;
    }
    for (const glyph of results.glyphs) {
      const tile = document.createElement("div");
      tile.className = "glyph-tile";
      tile.dataset.glyphId = glyph.id;
      tile.draggable = true;
      tile.appendChild(glyphThumb(glyph.path, 44));
      tile.addEventListener("dragstart", (e) => {
        controller.startDrag(glyph.id);
        e.dataTransfer?.setData("text/glyph-id", glyph.id);
      });
      tile.addEventListener("dragend", () => {
        controller.endDrag();
      });
      panel.appendChild(tile);
    }
    const badge = document.createElement("span");
    badge.className = "result-total";
    badge.dataset.role = "result-total";
    badge.textContent = String(results.total);
    panel.appendChild(badge);
    return panel;
  }

  controller.subscribe(render);
  render();
}
