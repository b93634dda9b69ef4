/** Toolbox: icon-only edit actions on the current selection. Hovering a
 * button plays its preview animation (CSS on the .anim group). Navigation
 * lives elsewhere; everything here edits, and everything disables when
 * nothing is selected.
 */

import { icon, IconName } from "./icons.js";
import { EditorController } from "./state.js";

interface Tool {
  action: string;
  iconName: IconName;
  run: () => void;
}

export function setupToolbox(root: HTMLElement, controller: EditorController): void {
  root.classList.add("toolbox");

  const tools: Tool[] = [
    {
      action: "delete",
      iconName: "delete",
      run: () => void controller.deleteSelection(),
    },
    {
      action: "rotate-ccw",
      iconName: "rotate-ccw",
      run: () => void controller.rotateSelection("ccw"),
    },
    {
      action: "rotate-cw",
      iconName: "rotate-cw",
      run: () => void controller.rotateSelection("cw"),
    },
    {
      action: "mirror",
      iconName: "mirror",
      run: () => void controller.mirrorSelection(),
    },
  ];

  const buttons: HTMLButtonElement[] = [];
  for (const tool of tools) {
    const btn = document.createElement("button");
    btn.type = "button";
    btn.dataset.action = tool.action;
    btn.className = "tool-btn";
    btn.appendChild(icon(tool.iconName, 28));
    btn.addEventListener("click", tool.run);
    buttons.push(btn);
    root.appendChild(btn);
  }

  function render(): void {
    const empty = controller.state.selection.length === 0;
    for (const btn of buttons) {
      btn.disabled = empty;
    }
  }

  controller.subscribe(render);
  render();
}
