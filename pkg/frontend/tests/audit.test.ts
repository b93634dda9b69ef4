// @vitest-environment jsdom
/** Icon-only audit: walk every functional control in every editor state
 * and verify none conveys its action through words. Digits are allowed
 * (the hint badge and result counts are numeric by design); letters are
 * not. The save popup subtree is the single exemption and must actually
 * contain text, so the audit cannot pass vacuously.
 */

import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { ApiClient } from "../src/api.js";
import { setupApp, App } from "../src/main.js";
import { mustFind, pinCanvasRect, startServer, TestServer } from "./harness.js";

let server: TestServer;
let app: App;

const CONTROL_SELECTOR = "button, [role=button], a, input, select, textarea, [data-action]";
const LETTERS = /\p{L}/u;

async function until(cond: () => boolean, what: string, ms = 10000): Promise<void> {
  const deadline = Date.now() + ms;
  while (Date.now() < deadline) {
    if (cond()) {
      return;
    }
    await new Promise((r) => setTimeout(r, 15));
  }
  throw new Error(`timed out waiting for ${what}`);
}

function auditControls(root: HTMLElement): number {
  const controls = root.querySelectorAll(CONTROL_SELECTOR);
  let audited = 0;
  for (const el of controls) {
    if (el.closest("[data-allow-text]") !== null) {
      continue;
    }
    audited += 1;
    const text = (el.textContent ?? "").trim();
    expect(LETTERS.test(text), `control ${describeEl(el)} bears text: "${text}"`).toBe(false);
    for (const attr of ["title", "placeholder", "value", "aria-label"]) {
      const v = el.getAttribute(attr);
      if (v !== null) {
        expect(LETTERS.test(v), `control ${describeEl(el)} ${attr}="${v}"`).toBe(false);
      }
    }
  }
  return audited;
}

function describeEl(el: Element): string {
  const action = el.getAttribute("data-action");
  const region = el.getAttribute("data-region");
  return `<${el.tagName.toLowerCase()}${action ? ` data-action=${action}` : ""}${
    region ? ` data-region=${region}` : ""
  }>`;
}

beforeAll(async () => {
  server = await startServer(true);
  document.body.innerHTML = "";
  const root = document.createElement("div");
  document.body.appendChild(root);
  app = setupApp(root, new ApiClient(server.base));
  await app.controller.init();
  pinCanvasRect(app.root);
});

afterAll(async () => {
  await server.stop();
});

describe("icon-only audit", () => {
  it("home screen", async () => {
    await until(
      () => app.root.querySelector("[data-region=hands]") !== null,
      "home puppet",
    );
    expect(auditControls(app.root)).toBeGreaterThanOrEqual(2);
  });

  it("category with a facet picked and results on screen", async () => {
    await app.controller.chooseCategory("hands");
    await app.controller.setFacet("handedness", "L");
    await until(
      () => app.root.querySelectorAll("[data-role=results] .glyph-tile").length > 0,
      "results",
    );
    // Home button, breadcrumb regions, facet tiles, toolbox, hint toggle.
    expect(auditControls(app.root)).toBeGreaterThanOrEqual(10);
  });

  it("placements selected, toolbox live, hints expanded", async () => {
    const first = app.root.querySelector("[data-role=results] .glyph-tile");
    expect(first).not.toBeNull();
    const glyphId = (first as HTMLElement).dataset.glyphId as string;
    await app.controller.dropGlyph(glyphId, 150, 150);
    await app.controller.select([0]);
    if (!app.controller.state.hintsExpanded) {
      app.controller.toggleHints();
    }
    await until(
      () => app.root.querySelector("[data-action=toggle-hints]") !== null,
      "hint toggle",
    );
    const toolButtons = app.root.querySelectorAll(".toolbox button");
    expect(toolButtons.length).toBe(4);
    for (const b of toolButtons) {
      expect((b as HTMLButtonElement).disabled).toBe(false);
    }
    expect(auditControls(app.root)).toBeGreaterThanOrEqual(10);
  });

  it("save popup is the only text-bearing surface and does bear text", async () => {
    app.controller.openSavePopup();
    await until(
      () => app.root.querySelector("[data-role=save-popup]") !== null,
      "save popup",
    );
    expect(auditControls(app.root)).toBeGreaterThanOrEqual(10);

    const popup = mustFind<HTMLElement>(app.root, "[data-role=save-popup]");
    expect(popup.closest("[data-allow-text]")).not.toBeNull();
    const popupText = (popup.textContent ?? "").trim();
    expect(LETTERS.test(popupText)).toBe(true);
    const formatButtons = popup.querySelectorAll("button[data-action^=save-]");
    expect(formatButtons.length).toBe(3);
    app.controller.closeSavePopup();
  });
});
