/** Assembles the editor: glyph menu on the left, sign display upper right,
 * toolbox lower right, hint band across the bottom, save popup on top.
 */

import { ApiClient } from "./api.js";
import { setupCanvas } from "./canvas.js";
import { setupHintPanel } from "./hints.js";
import { setupMenu } from "./menu.js";
import { setupSavePopup } from "./savePopup.js";
import { EditorController } from "./state.js";
import { setupToolbox } from "./toolbox.js";

export interface App {
  controller: EditorController;
  root: HTMLElement;
}

export function setupApp(root: HTMLElement, client: ApiClient): App {
  const controller = new EditorController(client);
  root.classList.add("editor");

  const menu = document.createElement("div");
  menu.dataset.pane = "menu";
  const display = document.createElement("div");
  display.dataset.pane = "display";
  const toolbox = document.createElement("div");
  toolbox.dataset.pane = "toolbox";
  const hintBand = document.createElement("div");
  hintBand.dataset.pane = "hints";
  const popup = document.createElement("div");
  popup.dataset.pane = "popup";

  root.append(menu, display, toolbox, hintBand, popup);

  setupMenu(menu, controller);
  setupCanvas(display, controller);
  setupToolbox(toolbox, controller);
  setupHintPanel(hintBand, controller);
  setupSavePopup(popup, controller);

  return { controller, root };
}

export async function startApp(root: HTMLElement, client: ApiClient): Promise<App> {
  const app = setupApp(root, client);
  await app.controller.init();
  return app;
}
