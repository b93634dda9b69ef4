/** Strings for the save popup, the only surface where text is allowed.
 * Swap this table to localize; the rest of the editor is icon-only.
 */

export interface Locale {
  saveTitle: string;
  labelPlaceholder: string;
  formatDatabase: string;
  formatText: string;
  formatSvg: string;
  savedAs: string;
  saveFailed: string;
  close: string;
}

export const locale: Locale = {
  saveTitle: "Save sign",
  labelPlaceholder: "Label (optional)",
  formatDatabase: "Sign database",
  formatText: "Notation text",
  formatSvg: "SVG image",
  savedAs: "Saved as",
  saveFailed: "Save failed",
  close: "Close",
};
