/** Typed client for the swiftsign HTTP API. All state lives on the server. */

export interface CategoryInfo {
  token: string;
  label: string;
  kind: string;
}

export interface FacetInfo {
  name: string;
  label: string;
  values: string[];
}

export interface FacetSchema {
  category: string;
  facets: FacetInfo[];
}

export interface GlyphJson {
  id: string;
  base_id: string;
  category: string;
  facets: Record<string, string>;
  path: string;
  anchor: [number, number];
}

export interface SearchPage {
  glyphs: GlyphJson[];
  total: number;
  offset: number;
  limit: number;
  remaining_counts: Record<string, Record<string, number>>;
}

export interface PlacementJson {
  glyph_id: string;
  x: number;
  y: number;
  rot: number;
  mirrored: boolean;
  scale: number;
}

export interface SignJson {
  canvas_w: number;
  canvas_h: number;
  id: string | null;
  label: string | null;
  placements: PlacementJson[];
}

export interface SessionJson {
  session_id: string;
  sign: SignJson;
  selection: number[];
  last_area: string | null;
}

export interface HintJson {
  glyph: GlyphJson;
  score: number;
}

export interface HintsResponse {
  area: string;
  hints: HintJson[];
  total: number;
  hint_count: number;
}

export interface RecordSummaryJson {
  id: string;
  label: string | null;
  saved_at: string;
  glyph_count: number;
}

export type OpBody = {
  op: "add" | "move" | "rotate" | "mirror" | "delete" | "clear" | "select" | "set_area";
  glyph_id?: string;
  x?: number;
  y?: number;
  dx?: number;
  dy?: number;
  direction?: "cw" | "ccw";
  indices?: number[];
  area?: string;
};

/** Error envelope from the server, or a transport failure (code "network"). */
export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(code: string, message: string, status: number) {
    super(message);
    this.name = "ApiError";
    this.code = code;
    this.status = status;
  }
}

async function raiseFor(res: Response): Promise<never> {
  let code = "unknown";
  let message = `HTTP ${res.status}`;
  try {
    const body = (await res.json()) as { error?: { code?: string; message?: string } };
    if (body.error) {
      code = body.error.code ?? code;
      message = body.error.message ?? message;
    }
  } catch {
    // non-JSON body; keep the HTTP status message
  }
  throw new ApiError(code, message, res.status);
}

export class ApiClient {
  readonly base: string;

  constructor(base = "") {
    this.base = base.replace(/\/$/, "");
  }

  private async request(path: string, init?: RequestInit): Promise<Response> {
    let res: Response;
    try {
      res = await fetch(this.base + path, init);
    } catch (exc) {
      throw new ApiError("network", String(exc), 0);
    }
    if (!res.ok) {
      await raiseFor(res);
    }
    return res;
  }

  private async getJson<T>(path: string): Promise<T> {
    const res = await this.request(path);
    return (await res.json()) as T;
  }

  private async postJson<T>(path: string, body: unknown): Promise<T> {
    const res = await this.request(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return (await res.json()) as T;
  }

  categories(): Promise<CategoryInfo[]> {
    return this.getJson("/api/catalog/categories");
  }

  schema(category: string): Promise<FacetSchema> {
    return this.getJson(`/api/catalog/${encodeURIComponent(category)}/schema`);
  }

  search(
    category: string,
    facets: Record<string, string>,
    offset = 0,
    limit = 50,
  ): Promise<SearchPage> {
    const params = new URLSearchParams();
    for (const [name, value] of Object.entries(facets)) {
      params.set(name, value);
    }
    params.set("offset", String(offset));
    params.set("limit", String(limit));
    return this.getJson(
      `/api/catalog/${encodeURIComponent(category)}/glyphs?${params.toString()}`,
    );
  }

  /** Every glyph of a category, paged through the search endpoint. */
  async allGlyphs(category: string): Promise<GlyphJson[]> {
    const out: GlyphJson[] = [];
    let offset = 0;
    for (;;) {
      const page = await this.search(category, {}, offset, 500);
      out.push(...page.glyphs);
      offset += page.glyphs.length;
      if (offset >= page.total || page.glyphs.length === 0) {
        return out;
      }
    }
  }

  createSession(canvasW = 500, canvasH = 500): Promise<SessionJson> {
    return this.postJson("/api/sessions", { canvas_w: canvasW, canvas_h: canvasH });
  }

  getSession(sessionId: string): Promise<SessionJson> {
    return this.getJson(`/api/sessions/${sessionId}`);
  }

  applyOp(sessionId: string, body: OpBody): Promise<SessionJson> {
    return this.postJson(`/api/sessions/${sessionId}/ops`, body);
  }

  hints(sessionId: string): Promise<HintsResponse> {
    return this.getJson(`/api/sessions/${sessionId}/hints`);
  }

  save(sessionId: string, label: string | null): Promise<RecordSummaryJson> {
    return this.postJson(`/api/sessions/${sessionId}/save`, { label });
  }

  async exportSession(sessionId: string, fmt: "swt" | "svg", crop = false): Promise<string> {
    const res = await this.request(
      `/api/sessions/${sessionId}/export?fmt=${fmt}&crop=${crop}`,
    );
    return res.text();
  }

  async exportRecord(recordId: string, fmt: "swt" | "svg", crop = false): Promise<string> {
    const res = await this.request(`/api/signs/${recordId}/export?fmt=${fmt}&crop=${crop}`);
    return res.text();
  }
}
