// @vitest-environment jsdom
/** Behavioral checks of the editor views against the live API server. */

import { afterAll, beforeAll, describe, expect, it, vi } from "vitest";
import { ApiClient, ApiError } from "../src/api.js";
import { setupApp, App } from "../src/main.js";
import { mustFind, pinCanvasRect, startServer, TestServer } from "./harness.js";

let server: TestServer;

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

function freshRoot(): HTMLElement {
  const root = document.createElement("div");
  document.body.appendChild(root);
  return root;
}

async function bootApp(): Promise<App> {
  const app = setupApp(freshRoot(), new ApiClient(server.base));
  await app.controller.init();
  pinCanvasRect(app.root);
  return app;
}

function resultIds(app: App): string[] {
  return [...app.root.querySelectorAll("[data-role=results] .glyph-tile")].map(
    (el) => (el as HTMLElement).dataset.glyphId as string,
  );
}

beforeAll(async () => {
  server = await startServer(true);
});

afterAll(async () => {
  await server.stop();
});

describe("glyph menu", () => {
  it("home shows the puppet prompt and no glyph results", async () => {
    const app = await bootApp();
    expect(app.root.querySelector("[data-role=puppet-prompt]")).not.toBeNull();
    expect(app.root.querySelector("[data-role=results]")).toBeNull();
    expect(app.root.querySelectorAll(".glyph-tile").length).toBe(0);
  });

  it("choosing hands renders one choose box per facet", async () => {
    const app = await bootApp();
    await app.controller.chooseCategory("hands");
    const boxes = app.root.querySelectorAll(".choose-box");
    expect(boxes.length).toBe(3);
    expect(app.root.querySelector("[data-facet=handedness]")).not.toBeNull();
    expect(resultIds(app).length).toBe(48);
  });

  it("facet clicks are order independent end to end", async () => {
    const app = await bootApp();
    await app.controller.chooseCategory("hands");
    mustFind<HTMLButtonElement>(
      app.root,
      "button[data-facet=handedness][data-value=L]",
    ).click();
    await until(() => app.controller.state.facets["handedness"] === "L", "facet L");
    mustFind<HTMLButtonElement>(app.root, "button[data-facet=fingers][data-value='1']").click();
    await until(() => app.controller.state.facets["fingers"] === "1", "facet 1");
    const orderA = resultIds(app);

    await app.controller.chooseCategory("hands");
    mustFind<HTMLButtonElement>(app.root, "button[data-facet=fingers][data-value='1']").click();
    await until(() => app.controller.state.facets["fingers"] === "1", "facet 1 again");
    mustFind<HTMLButtonElement>(
      app.root,
      "button[data-facet=handedness][data-value=L]",
    ).click();
    await until(() => app.controller.state.facets["handedness"] === "L", "facet L again");
    const orderB = resultIds(app);

    expect(orderA.length).toBeGreaterThan(0);
    expect(orderB).toEqual(orderA);
  });

  it("re-clicking the active value clears the facet", async () => {
    const app = await bootApp();
    await app.controller.chooseCategory("hands");
    mustFind<HTMLButtonElement>(
      app.root,
      "button[data-facet=handedness][data-value=L]",
    ).click();
    await until(() => resultIds(app).length === 24, "narrowed results");
    mustFind<HTMLButtonElement>(
      app.root,
      "button[data-facet=handedness][data-value=L]",
    ).click();
    await until(() => resultIds(app).length === 48, "restored results");
    expect(app.controller.state.facets["handedness"]).toBeUndefined();
  });

  it("one highlight per box, and untouched boxes collapse", async () => {
    const app = await bootApp();
    await app.controller.chooseCategory("hands");
    await app.controller.setFacet("handedness", "L");
    await app.controller.setFacet("handedness", "R");
    const selected = app.root.querySelectorAll(
      "[data-facet=handedness].choose-box .facet-value.selected",
    );
    expect(selected.length).toBe(1);
    expect((selected[0] as HTMLElement).dataset.value).toBe("R");
    const handBox = mustFind(app.root, ".choose-box[data-facet=handedness]");
    const fingerBox = mustFind(app.root, ".choose-box[data-facet=fingers]");
    expect(handBox.classList.contains("compact")).toBe(false);
    expect(fingerBox.classList.contains("compact")).toBe(true);
  });

  it("breadcrumb carries the red mark and switches areas directly", async () => {
    const app = await bootApp();
    await app.controller.chooseCategory("hands");
    const crumb = mustFind(app.root, "[data-role=breadcrumb]");
    expect(crumb.querySelector(".region-mark")).not.toBeNull();
    expect(app.root.querySelector("[data-role=menu-home]")).toBeNull();

    crumb
      .querySelector("[data-region=head]")
      ?.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    await until(() => app.controller.state.category === "head", "switched to head");
    expect(app.controller.state.lastArea).toBe("head");
    expect(resultIds(app).length).toBe(4);
    expect(app.root.querySelector("[data-role=menu-home]")).toBeNull();
  });

  it("home button returns to the puppet without touching the session", async () => {
    const app = await bootApp();
    await app.controller.chooseCategory("hands");
    const sid = app.controller.state.sessionId;
    mustFind<HTMLButtonElement>(app.root, "button[data-action=home]").click();
    expect(app.root.querySelector("[data-role=menu-home]")).not.toBeNull();
    expect(app.controller.state.sessionId).toBe(sid);
    // The explored area survives going home; only the menu resets.
    expect(app.controller.state.lastArea).toBe("hands");
  });

  it("menu API failure shows the retry affordance, icon-only", async () => {
    const app = setupApp(freshRoot(), new ApiClient("http://127.0.0.1:1"));
    await app.controller.init();
    const err = app.root.querySelector("[data-role=menu-error]");
    expect(err).not.toBeNull();
    const retry = mustFind(app.root, "button[data-action=retry]");
    expect(/\p{L}/u.test((retry.textContent ?? "").trim())).toBe(false);
  });
});

describe("sign display", () => {
  it("a rejected drop flashes the border and changes nothing", async () => {
    const app = await bootApp();
    await app.controller.chooseCategory("hands");
    const glyphId = resultIds(app)[0] as string;
    const ok = await app.controller.dropGlyph(glyphId, 499, 499);
    expect(ok).toBe(true);
    const before = JSON.stringify(app.controller.state.sign);

    const rejected = await app.controller.dropGlyph(glyphId, 900, 200);
    expect(rejected).toBe(false);
    expect(JSON.stringify(app.controller.state.sign)).toBe(before);
    const stage = mustFind(app.root, ".canvas-stage");
    expect(stage.classList.contains("flash")).toBe(true);
  });

  it("shift-click grows the selection; toolbox follows it", async () => {
    const app = await bootApp();
    await app.controller.chooseCategory("hands");
    const ids = resultIds(app);
    await app.controller.dropGlyph(ids[0] as string, 100, 100);
    await app.controller.dropGlyph(ids[1] as string, 300, 300);

    const tools = [...app.root.querySelectorAll(".toolbox button")] as HTMLButtonElement[];
    expect(tools.every((b) => b.disabled)).toBe(true);

    const groups = app.root.querySelectorAll("[data-role=sign-canvas] [data-index]");
    groups[0]?.dispatchEvent(new MouseEvent("pointerdown", { clientX: 100, clientY: 100, bubbles: true }));
    window.dispatchEvent(new MouseEvent("pointerup", {}));
    await until(() => app.controller.state.selection.length === 1, "single select");

    const groups2 = app.root.querySelectorAll("[data-role=sign-canvas] [data-index]");
    groups2[1]?.dispatchEvent(
      new MouseEvent("pointerdown", { clientX: 300, clientY: 300, bubbles: true, shiftKey: true }),
    );
    window.dispatchEvent(new MouseEvent("pointerup", {}));
    await until(() => app.controller.state.selection.length === 2, "shift select");
    expect(app.controller.state.selection).toEqual([0, 1]);
    expect(tools.every((b) => !b.disabled)).toBe(true);
  });

  it("dragging a selected glyph moves the whole selection", async () => {
    const app = await bootApp();
    await app.controller.chooseCategory("hands");
    const ids = resultIds(app);
    await app.controller.dropGlyph(ids[0] as string, 100, 100);
    await app.controller.dropGlyph(ids[1] as string, 300, 300);
    await app.controller.select([0, 1]);

    const group = app.root.querySelector("[data-role=sign-canvas] [data-index='0']");
    group?.dispatchEvent(new MouseEvent("pointerdown", { clientX: 100, clientY: 100, bubbles: true }));
    window.dispatchEvent(new MouseEvent("pointermove", { clientX: 140, clientY: 130 }));
    window.dispatchEvent(new MouseEvent("pointerup", {}));
    await until(() => app.controller.state.sign.placements[0]?.x === 140, "moved");
    const p = app.controller.state.sign.placements;
    expect([p[0]?.x, p[0]?.y]).toEqual([140, 130]);
    expect([p[1]?.x, p[1]?.y]).toEqual([340, 330]);
    expect(app.controller.state.selection).toEqual([0, 1]);
  });

  it("delete clears its selection; canvas clear empties the sign", async () => {
    const app = await bootApp();
    await app.controller.chooseCategory("hands");
    const ids = resultIds(app);
    await app.controller.dropGlyph(ids[0] as string, 100, 100);
    await app.controller.dropGlyph(ids[1] as string, 300, 300);
    await app.controller.select([0]);
    mustFind<HTMLButtonElement>(app.root, "button[data-action=delete]").click();
    await until(() => app.controller.state.sign.placements.length === 1, "deleted");
    expect(app.controller.state.selection).toEqual([]);

    mustFind<HTMLButtonElement>(app.root, "button[data-action=clear]").click();
    await until(() => app.controller.state.sign.placements.length === 0, "cleared");
  });
});

describe("hint panel", () => {
  it("is hidden before any area is explored", async () => {
    const app = await bootApp();
    const panel = mustFind(app.root, ".hint-panel");
    expect(panel.classList.contains("hidden")).toBe(true);
  });

  it("badge equals the expanded list length when under the limit", async () => {
    const app = await bootApp();
    await app.controller.chooseCategory("hands");
    await until(() => app.controller.state.hints !== null, "hints fetched");
    const badge = mustFind(app.root, "[data-role=hint-badge]");
    const hints = app.controller.state.hints;
    expect(hints).not.toBeNull();
    expect(badge.textContent).toBe(String(hints?.hint_count));
    app.controller.toggleHints();
    const strip = app.root.querySelectorAll("[data-role=hint-strip] .hint-tile");
    expect(strip.length).toBe(hints?.hints.length);
    expect(hints?.total).toBe(hints?.hints.length);
  });

  it("an API failure swaps the badge for the error glyph", async () => {
    const app = await bootApp();
    await app.controller.chooseCategory("hands");
    await until(() => app.controller.state.hints !== null, "hints fetched");
    expect(app.root.querySelector("[data-role=hint-error]")).toBeNull();

    vi.spyOn(app.controller.client, "hints").mockRejectedValueOnce(
      new ApiError("network", "boom", 0),
    );
    await app.controller.refreshHints();
    expect(app.root.querySelector("[data-role=hint-badge]")).toBeNull();
    expect(app.root.querySelector("[data-role=hint-error]")).not.toBeNull();
    vi.restoreAllMocks();
  });
});

describe("api client", () => {
  it("surfaces the server's error envelope", async () => {
    const client = new ApiClient(server.base);
    let caught: unknown = null;
    try {
      await client.schema("nonexistent");
    } catch (exc) {
      caught = exc;
    }
    expect(caught).toBeInstanceOf(ApiError);
    const err = caught as ApiError;
    expect(err.code).toBe("unknown_category");
    expect(err.status).toBe(404);
  });
});
