/** Save popup: label field plus the three output formats. This is the only
 * surface allowed to carry words, and its words all come from the locale
 * table. The database choice waits for the server's record id and shows it
 * as the confirmation.
 */

import { locale } from "./locale.js";
import { EditorController } from "./state.js";

function download(name: string, mime: string, content: string): void {
  if (typeof URL.createObjectURL !== "function") {
    return;
  }
  const url = URL.createObjectURL(new Blob([content], { type: mime }));
  const a = document.createElement("a");
  a.href = url;
  a.download = name;
  a.click();
  URL.revokeObjectURL(url);
}

export function setupSavePopup(root: HTMLElement, controller: EditorController): void {
  root.classList.add("save-popup-host");
  // Marks the subtree where textual controls are permitted.
  root.dataset.allowText = "true";

  function render(): void {
    const { popupOpen, savedId, saveError } = controller.state;
    // Unrelated state changes re-render too; keep what was typed.
    const typed = root.querySelector<HTMLInputElement>("[data-role=save-label]")?.value ?? "";
    root.replaceChildren();
    if (!popupOpen) {
      root.classList.add("hidden");
      return;
    }
    root.classList.remove("hidden");

    const overlay = document.createElement("div");
    overlay.className = "popup-overlay";
    const box = document.createElement("div");
    box.className = "popup-box";
    box.dataset.role = "save-popup";

    const title = document.createElement("h2");
    title.textContent = locale.saveTitle;
    box.appendChild(title);

    const labelInput = document.createElement("input");
    labelInput.type = "text";
    labelInput.placeholder = locale.labelPlaceholder;
    labelInput.dataset.role = "save-label";
    labelInput.value = typed;
    box.appendChild(labelInput);

    const formats = document.createElement("div");
    formats.className = "popup-formats";

    const dbBtn = document.createElement("button");
    dbBtn.type = "button";
    dbBtn.dataset.action = "save-db";
    dbBtn.textContent = locale.formatDatabase;
    dbBtn.addEventListener("click", () => {
      const label = labelInput.value.trim();
      void controller.saveToDatabase(label === "" ? null : label);
    });

    const textBtn = document.createElement("button");
    textBtn.type = "button";
    textBtn.dataset.action = "save-text";
    textBtn.textContent = locale.formatText;
    textBtn.addEventListener("click", () => {
      void controller.exportText().then((text) => {
        if (text !== null) {
          download("sign.swt", "text/plain", text);
        }
      });
    });

    const svgBtn = document.createElement("button");
    svgBtn.type = "button";
    svgBtn.dataset.action = "save-svg";
    svgBtn.textContent = locale.formatSvg;
    svgBtn.addEventListener("click", () => {
      void controller.exportSvg().then((text) => {
        if (text !== null) {
          download("sign.svg", "image/svg+xml", text);
        }
      });
    });

    formats.append(dbBtn, textBtn, svgBtn);
    box.appendChild(formats);

    if (savedId !== null) {
      const done = document.createElement("p");
      done.className = "popup-confirmation";
      done.dataset.role = "save-confirmation";
      done.dataset.recordId = savedId;
      done.textContent = `${locale.savedAs} ${savedId}`;
      box.appendChild(done);
    } else if (saveError) {
      const fail = document.createElement("p");
      fail.className = "popup-failure";
      fail.dataset.role = "save-failure";
      fail.textContent = locale.saveFailed;
      box.appendChild(fail);
    }

    const close = document.createElement("button");
    close.type = "button";
    close.dataset.action = "close-popup";
    close.textContent = locale.close;
    close.addEventListener("click", () => {
      controller.closeSavePopup();
    });
    box.appendChild(close);

    overlay.appendChild(box);
    root.appendChild(overlay);
  }

  controller.subscribe(render);
  render();
}
