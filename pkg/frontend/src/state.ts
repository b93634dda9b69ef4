/** Editor view state and the controller that mediates every API call.
 *
 * Views render from the state snapshot and never talk to the server
 * themselves; the sign, selection and explored area are always the
 * server echo, so a refresh reproduces the exact same picture.
 */

import {
  ApiClient,
  ApiError,
  CategoryInfo,
  FacetSchema,
  GlyphJson,
  HintsResponse,
  SearchPage,
  SignJson,
} from "./api.js";

export interface Marquee {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

export interface ViewState {
  sessionId: string | null;
  categories: CategoryInfo[];
  category: string | null;
  schema: FacetSchema | null;
  facets: Record<string, string>;
  results: SearchPage | null;
  sign: SignJson;
  selection: number[];
  lastArea: string | null;
  marquee: Marquee | null;
  hintsExpanded: boolean;
  hints: HintsResponse | null;
  hintsError: boolean;
  menuError: boolean;
  dragPayload: string | null;
  popupOpen: boolean;
  savedId: string | null;
  saveError: boolean;
  flash: number;
}

const EMPTY_SIGN: SignJson = {
  canvas_w: 500,
  canvas_h: 500,
  id: null,
  label: null,
  placements: [],
};

export type Listener = () => void;

export class EditorController {
  readonly client: ApiClient;
  readonly state: ViewState;

  private listeners: Listener[] = [];
  private glyphCache = new Map<string, GlyphJson>();
  private loadedCategories = new Set<string>();
  /** category -> facet -> value -> representative glyph (lowest id). */
  private representatives = new Map<string, Map<string, Map<string, GlyphJson>>>();
  private categoryIcons = new Map<string, GlyphJson>();

  constructor(client: ApiClient) {
    this.client = client;
    this.state = {
      sessionId: null,
      categories: [],
      category: null,
      schema: null,
      facets: {},
      results: null,
      sign: { ...EMPTY_SIGN },
      selection: [],
      lastArea: null,
      marquee: null,
      hintsExpanded: false,
      hints: null,
      hintsError: false,
      menuError: false,
      dragPayload: null,
      popupOpen: false,
      savedId: null,
      saveError: false,
      flash: 0,
    };
  }

  subscribe(fn: Listener): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) {
      fn();
    }
  }

  glyph(id: string): GlyphJson | undefined {
    return this.glyphCache.get(id);
  }

  representative(category: string, facet: string, value: string): GlyphJson | undefined {
    return this.representatives.get(category)?.get(facet)?.get(value);
  }

  categoryIcon(category: string): GlyphJson | undefined {
    return this.categoryIcons.get(category);
  }

  /** Fetch one glyph per category as its button icon; failures just leave
   * the generic marker in place. */
  async loadCategoryIcons(tokens: string[]): Promise<void> {
    let changed = false;
    for (const token of tokens) {
      if (this.categoryIcons.has(token)) {
        continue;
      }
      try {
        const page = await this.client.search(token, {}, 0, 1);
        const first = page.glyphs[0];
        if (first !== undefined) {
          this.categoryIcons.set(token, first);
          this.glyphCache.set(first.id, first);
          changed = true;
        }
      } catch {
        // keep the placeholder icon
      }
    }
    if (changed) {
      this.emit();
    }
  }

  /** Fetch categories and open a session; menuError is set on failure. */
  async init(canvasW = 500, canvasH = 500): Promise<void> {
    try {
      this.state.categories = await this.client.categories();
      const session = await this.client.createSession(canvasW, canvasH);
      this.state.sessionId = session.session_id;
      this.state.sign = session.sign;
      this.state.selection = session.selection;
      this.state.lastArea = session.last_area;
      this.state.menuError = false;
    } catch {
      this.state.menuError = true;
    }
    this.emit();
  }

  async retryInit(): Promise<void> {
    await this.init(this.state.sign.canvas_w, this.state.sign.canvas_h);
  }

  private async ensureCategory(category: string): Promise<void> {
    if (this.loadedCategories.has(category)) {
      return;
    }
    const glyphs = await this.client.allGlyphs(category);
    const byFacet = new Map<string, Map<string, GlyphJson>>();
    for (const g of glyphs) {
      this.glyphCache.set(g.id, g);
      for (const [facet, value] of Object.entries(g.facets)) {
        let values = byFacet.get(facet);
        if (!values) {
          values = new Map();
          byFacet.set(facet, values);
        }
        if (!values.has(value)) {
          values.set(value, g);
        }
      }
    }
    this.representatives.set(category, byFacet);
    this.loadedCategories.add(category);
  }

  /** Enter a category: load schema/glyphs, reset facets, mark the area. */
  async chooseCategory(category: string): Promise<void> {
    try {
      this.state.schema = await this.client.schema(category);
      await this.ensureCategory(category);
      this.state.category = category;
      this.state.facets = {};
      this.state.results = await this.client.search(category, {});
      this.state.menuError = false;
      if (this.state.sessionId !== null) {
        const session = await this.client.applyOp(this.state.sessionId, {
          op: "set_area",
          area: category,
        });
        this.state.lastArea = session.last_area;
      }
    } catch {
      this.state.menuError = true;
      this.emit();
      return;
    }
    this.emit();
    await this.refreshHints();
  }

  goHome(): void {
    this.state.category = null;
    this.state.schema = null;
    this.state.facets = {};
    this.state.results = null;
    this.emit();
  }

  /** Set or toggle a facet; clicking the active value clears it. */
  async setFacet(name: string, value: string): Promise<void> {
    const category = this.state.category;
    if (category === null) {
      return;
    }
    const next = { ...this.state.facets };
    if (next[name] === value) {
      delete next[name];
    } else {
      next[name] = value;
    }
    try {
      this.state.results = await this.client.search(category, next);
      this.state.facets = next;
      this.state.menuError = false;
    } catch {
      this.state.menuError = true;
    }
    this.emit();
  }

  async clearFacet(name: string): Promise<void> {
    const category = this.state.category;
    if (category === null || !(name in this.state.facets)) {
      return;
    }
    const next = { ...this.state.facets };
    delete next[name];
    try {
      this.state.results = await this.client.search(category, next);
      this.state.facets = next;
      this.state.menuError = false;
    } catch {
      this.state.menuError = true;
    }
    this.emit();
  }

  startDrag(glyphId: string): void {
    this.state.dragPayload = glyphId;
  }

  endDrag(): void {
    this.state.dragPayload = null;
  }

  /** Apply one sign op; a rejection flashes the canvas and changes nothing. */
  private async op(body: Parameters<ApiClient["applyOp"]>[1]): Promise<boolean> {
    if (this.state.sessionId === null) {
      return false;
    }
    try {
      const session = await this.client.applyOp(this.state.sessionId, body);
      this.state.sign = session.sign;
      this.state.selection = session.selection;
      this.state.lastArea = session.last_area;
      this.emit();
      await this.refreshHints();
      return true;
    } catch (exc) {
      if (exc instanceof ApiError) {
        this.state.flash += 1;
        this.emit();
        return false;
      }
      throw exc;
    }
  }

  async dropGlyph(glyphId: string, x: number, y: number): Promise<boolean> {
    this.state.dragPayload = null;
    return this.op({ op: "add", glyph_id: glyphId, x: Math.round(x), y: Math.round(y) });
  }

  async select(indices: number[]): Promise<boolean> {
    return this.op({ op: "select", indices });
  }

  /** Click semantics: plain replaces, shift toggles membership. */
  async clickPlacement(index: number, shift: boolean): Promise<boolean> {
    let next: number[];
    if (shift) {
      const current = new Set(this.state.selection);
      if (current.has(index)) {
        current.delete(index);
      } else {
        current.add(index);
      }
      next = [...current];
    } else {
      next = [index];
    }
    return this.select(next);
  }

  /** Select every placement whose anchor falls inside the marquee. */
  async marqueeSelect(x0: number, y0: number, x1: number, y1: number): Promise<boolean> {
    const [lo_x, hi_x] = x0 <= x1 ? [x0, x1] : [x1, x0];
    const [lo_y, hi_y] = y0 <= y1 ? [y0, y1] : [y1, y0];
    const indices: number[] = [];
    this.state.sign.placements.forEach((p, i) => {
      if (p.x >= lo_x && p.x <= hi_x && p.y >= lo_y && p.y <= hi_y) {
        indices.push(i);
      }
    });
    return this.select(indices);
  }

  setMarquee(marquee: Marquee | null): void {
    this.state.marquee = marquee;
    this.emit();
  }

  async moveSelection(dx: number, dy: number): Promise<boolean> {
    if (this.state.selection.length === 0) {
      return false;
    }
    return this.op({ op: "move", dx: Math.round(dx), dy: Math.round(dy) });
  }

  async rotateSelection(direction: "cw" | "ccw"): Promise<boolean> {
    if (this.state.selection.length === 0) {
      return false;
    }
    return this.op({ op: "rotate", direction });
  }

  async mirrorSelection(): Promise<boolean> {
    if (this.state.selection.length === 0) {
      return false;
    }
    return this.op({ op: "mirror" });
  }

  async deleteSelection(): Promise<boolean> {
    if (this.state.selection.length === 0) {
      return false;
    }
    return this.op({ op: "delete" });
  }

  async clearSign(): Promise<boolean> {
    return this.op({ op: "clear" });
  }

  /** Refetch hints; no explored area hides the panel instead of erroring. */
  async refreshHints(): Promise<void> {
    if (this.state.sessionId === null || this.state.lastArea === null) {
      this.state.hints = null;
      this.state.hintsError = false;
      this.emit();
      return;
    }
    try {
      this.state.hints = await this.client.hints(this.state.sessionId);
      for (const h of this.state.hints.hints) {
        this.glyphCache.set(h.glyph.id, h.glyph);
      }
      this.state.hintsError = false;
    } catch {
      this.state.hints = null;
      this.state.hintsError = true;
    }
    this.emit();
  }

  toggleHints(): void {
    this.state.hintsExpanded = !this.state.hintsExpanded;
    this.emit();
  }

  openSavePopup(): void {
    this.state.popupOpen = true;
    this.state.savedId = null;
    this.state.saveError = false;
    this.emit();
  }

  closeSavePopup(): void {
    this.state.popupOpen = false;
    this.emit();
  }

  /** Store the sign; rendering waits for the record id from the server. */
  async saveToDatabase(label: string | null): Promise<string | null> {
    if (this.state.sessionId === null) {
      return null;
    }
    try {
      const record = await this.client.save(this.state.sessionId, label);
      const session = await this.client.getSession(this.state.sessionId);
      this.state.sign = session.sign;
      this.state.selection = session.selection;
      this.state.savedId = record.id;
      this.state.saveError = false;
      this.emit();
      await this.refreshHints();
      return record.id;
    } catch {
      this.state.saveError = true;
      this.emit();
      return null;
    }
  }

  async exportText(): Promise<string | null> {
    if (this.state.sessionId === null) {
      return null;
    }
    try {
      return await this.client.exportSession(this.state.sessionId, "swt");
    } catch {
      this.state.saveError = true;
      this.emit();
      return null;
    }
  }

  async exportSvg(): Promise<string | null> {
    if (this.state.sessionId === null) {
      return null;
    }
    try {
      return await this.client.exportSession(this.state.sessionId, "svg");
    } catch {
      this.state.saveError = true;
      this.emit();
      return null;
    }
  }
}
