"""HTTP facade over the catalog, search, sign sessions, hints, and store.

Every endpoint delegates to the corresponding module function; the handlers
only translate between JSON and domain values. Errors surface as
``{"error": {"code", "message"}}`` with the status carried by the exception,
except inside the ops endpoint where any rejected op answers 422.

Sessions are in-memory and expire after a configurable idle timeout; each
session's edits are applied under its own lock, and state is swapped in as
one assignment so concurrent readers never observe a half-applied edit.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Literal

from fastapi import FastAPI, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from . import __version__
from .catalog import Catalog, Glyph, load_catalog_path
from .errors import (
    InvalidOpError,
    NoAreaError,
    SessionNotFoundError,
    SwiftSignError,
)
from .hints import hints as compute_hints
from .notation import serialize_text
from .search import FacetQuery, execute, new_query, remaining_counts, set_facet
from .sign import (
    Selection,
    Sign,
    add_glyph,
    clear,
    delete,
    mirror,
    move,
    normalize_selection,
    rotate,
)
from .store import SignRecord, SignStore
from .svg import export_svg

PAGE_LIMIT_DEFAULT = 50
PAGE_LIMIT_MAX = 500


@dataclass(frozen=True)
class ServerConfig:
    """Startup configuration; catalog and store paths are mandatory."""

    catalog_path: str
    store_path: str
    tau: int = 1
    hint_limit: int = 20
    session_ttl: float = 3600.0
    cors_origins: tuple[str, ...] = ("*",)
    static_dir: str | None = None


class _Session:
    def __init__(self, session_id: str, sign: Sign):
        self.id = session_id
        self.sign = sign
        self.selection: Selection = frozenset()
        self.last_area: str | None = None
        self.lock = threading.Lock()
        self.touched = time.monotonic()


class _SessionRegistry:
    """In-memory session table with idle expiry on every access."""

    def __init__(self, ttl: float):
        self.ttl = ttl
        self._lock = threading.Lock()
        self._sessions: dict[str, _Session] = {}

    def _purge(self, now: float) -> None:
        dead = [sid for sid, s in self._sessions.items() if now - s.touched > self.ttl]
        for sid in dead:
            del self._sessions[sid]

    def create(self, sign: Sign) -> _Session:
        with self._lock:
            now = time.monotonic()
            self._purge(now)
            session = _Session(uuid.uuid4().hex, sign)
            self._sessions[session.id] = session
            return session

    def get(self, session_id: str) -> _Session:
        with self._lock:
            now = time.monotonic()
            self._purge(now)
            session = self._sessions.get(session_id)
            if session is None:
                raise SessionNotFoundError(session_id)
            session.touched = now
            return session

    def drop(self, session_id: str) -> None:
        with self._lock:
            self._purge(time.monotonic())
            if session_id not in self._sessions:
                raise SessionNotFoundError(session_id)
            del self._sessions[session_id]


# -- JSON shapes -----------------------------------------------------------


def _glyph_json(g: Glyph) -> dict[str, Any]:
    return {
        "id": g.id,
        "base_id": g.base_id,
        "category": g.category,
        "facets": dict(g.facets),
        "path": g.path,
        "anchor": list(g.anchor),
    }


def _sign_json(sign: Sign) -> dict[str, Any]:
    return {
        "canvas_w": sign.canvas_w,
        "canvas_h": sign.canvas_h,
        "id": sign.id,
        "label": sign.label,
        "placements": [
            {
                "glyph_id": p.glyph_id,
                "x": p.x,
                "y": p.y,
                "rot": p.rot,
                "mirrored": p.mirrored,
                "scale": p.scale,
            }
            for p in sign.placements
        ],
    }


def _session_json(session: _Session) -> dict[str, Any]:
    return {
        "session_id": session.id,
        "sign": _sign_json(session.sign),
        "selection": sorted(session.selection),
        "last_area": session.last_area,
    }


def _record_summary_json(record: SignRecord) -> dict[str, Any]:
    return {
        "id": record.id,
        "label": record.sign.label,
        "saved_at": record.saved_at.strftime("%Y-%m-%dT%H:%M:%SZ"),
        "glyph_count": len(record.glyph_list),
    }


def _record_json(record: SignRecord) -> dict[str, Any]:
    body = _record_summary_json(record)
    body["glyph_list"] = list(record.glyph_list)
    body["notation"] = serialize_text(record.sign)
    body["sign"] = _sign_json(record.sign)
    return body


# -- request bodies --------------------------------------------------------


class SessionCreate(BaseModel):
    canvas_w: int = 500
    canvas_h: int = 500


class OpRequest(BaseModel):
    op: Literal["add", "move", "rotate", "mirror", "delete", "clear", "select", "set_area"]
    glyph_id: str | None = None
    x: int | None = None
    y: int | None = None
    dx: int | None = None
    dy: int | None = None
    direction: Literal["cw", "ccw"] | None = None
    indices: list[int] | None = None
    area: str | None = None


class SaveRequest(BaseModel):
    label: str | None = None


def _require(value: Any, op: str, name: str) -> Any:
    if value is None:
        raise InvalidOpError(f"op {op!r} requires {name!r}")
    return value


def _export_response(sign: Sign, catalog: Catalog, fmt: str, crop: bool) -> Response:
    if fmt == "swt":
        return PlainTextResponse(serialize_text(sign) + "\n")
    if fmt == "svg":
        return Response(export_svg(sign, catalog, crop=crop), media_type="image/svg+xml")
    raise InvalidOpError(f"unknown export format {fmt!r} (expected swt or svg)")


def create_app(
    config: ServerConfig,
    *,
    catalog: Catalog | None = None,
    store: SignStore | None = None,
) -> FastAPI:
    """Build the application; loads the catalog and store unless injected.

    A broken catalog or store raises here, so a misconfigured service
    refuses to start instead of serving errors.
    """
    if catalog is None:
        catalog = load_catalog_path(config.catalog_path)
    if store is None:
        store = SignStore(config.store_path, catalog)
    registry = _SessionRegistry(config.session_ttl)

    app = FastAPI(title="swiftsign", version=__version__, docs_url=None, redoc_url=None)
    app.state.config = config
    app.state.catalog = catalog
    app.state.store = store
    app.state.sessions = registry

    if config.cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(config.cors_origins),
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(SwiftSignError)
    async def _domain_error(_request: Request, exc: SwiftSignError) -> JSONResponse:
        return JSONResponse(
            status_code=exc.http_status,
            content={"error": {"code": exc.code, "message": str(exc)}},
        )

    @app.exception_handler(RequestValidationError)
    async def _body_error(_request: Request, exc: RequestValidationError) -> JSONResponse:
        first = exc.errors()[0] if exc.errors() else {}
        loc = ".".join(str(part) for part in first.get("loc", ()))
        message = f"{loc}: {first.get('msg', 'invalid request')}" if loc else "invalid request"
        return JSONResponse(
            status_code=422,
            content={"error": {"code": "validation", "message": message}},
        )

    # -- catalog and search ------------------------------------------------

    @app.get("/api/catalog/categories")
    def list_categories() -> list[dict[str, str]]:
        return [
            {"token": c.token, "label": c.label, "kind": c.kind}
            for c in catalog.categories
        ]

    @app.get("/api/catalog/{category}/schema")
    def category_schema(category: str) -> dict[str, Any]:
        schema = catalog.facet_schema(category)
        return {
            "category": schema.category,
            "facets": [
                {"name": f.name, "label": f.label, "values": list(f.values)}
                for f in schema.facets
            ],
        }

    @app.get("/api/catalog/{category}/glyphs")
    def search_glyphs(
        category: str,
        request: Request,
        offset: int = Query(default=0, ge=0),
        limit: int = Query(default=PAGE_LIMIT_DEFAULT, ge=1, le=PAGE_LIMIT_MAX),
    ) -> dict[str, Any]:
        query: FacetQuery = new_query(catalog, category)
        for name, value in request.query_params.multi_items():
            if name in ("offset", "limit"):
                continue
            query = set_facet(catalog, query, name, value)
        results = execute(catalog, query)
        return {
            "glyphs": [_glyph_json(g) for g in results[offset : offset + limit]],
            "total": len(results),
            "offset": offset,
            "limit": limit,
            "remaining_counts": remaining_counts(catalog, query),
        }

    # -- sessions ----------------------------------------------------------

    @app.post("/api/sessions", status_code=201)
    def create_session(body: SessionCreate | None = None) -> dict[str, Any]:
        body = body or SessionCreate()
        session = registry.create(Sign(canvas_w=body.canvas_w, canvas_h=body.canvas_h))
        return _session_json(session)

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str) -> dict[str, Any]:
        return _session_json(registry.get(session_id))

    @app.delete("/api/sessions/{session_id}", status_code=204)
    def drop_session(session_id: str) -> Response:
        registry.drop(session_id)
        return Response(status_code=204)

    @app.post("/api/sessions/{session_id}/ops")
    def apply_op(session_id: str, body: OpRequest) -> dict[str, Any]:
        session = registry.get(session_id)
        with session.lock:
            sign = session.sign
            selection = session.selection
            area = session.last_area
            try:
                if body.op == "add":
                    sign = add_glyph(
                        sign,
                        catalog,
                        _require(body.glyph_id, "add", "glyph_id"),
                        _require(body.x, "add", "x"),
                        _require(body.y, "add", "y"),
                    )
                elif body.op == "move":
                    sign = move(
                        sign,
                        selection,
                        _require(body.dx, "move", "dx"),
                        _require(body.dy, "move", "dy"),
                    )
                elif body.op == "rotate":
                    sign = rotate(sign, selection, _require(body.direction, "rotate", "direction"))
                elif body.op == "mirror":
                    sign = mirror(sign, selection)
                elif body.op == "delete":
                    sign = delete(sign, selection)
                    selection = frozenset()
                elif body.op == "clear":
                    sign = clear(sign)
                    selection = frozenset()
                elif body.op == "select":
                    selection = normalize_selection(sign, _require(body.indices, "select", "indices"))
                elif body.op == "set_area":
                    area = _require(body.area, "set_area", "area")
                    if not catalog.has_category(area):
                        raise InvalidOpError(f"unknown area {area!r}")
            except SwiftSignError as exc:
                if exc.http_status == 422:
                    raise
                # Any op rejection is a 422; keep the specific code.
                wrapped = SwiftSignError(str(exc))
                wrapped.code = exc.code
                wrapped.http_status = 422
                raise wrapped from exc
            session.sign = sign
            session.selection = selection
            session.last_area = area
            return _session_json(session)

    @app.get("/api/sessions/{session_id}/hints")
    def session_hints(session_id: str) -> dict[str, Any]:
        session = registry.get(session_id)
        sign = session.sign
        area = session.last_area
        if area is None:
            raise NoAreaError()
        result = compute_hints(
            store.table,
            catalog,
            area,
            [p.glyph_id for p in sign.placements],
            tau=config.tau,
            limit=config.hint_limit,
        )
        return {
            "area": area,
            "hints": [{"glyph": _glyph_json(g), "score": s} for g, s in result.hints],
            "total": result.total,
            "hint_count": result.total,
        }

    @app.post("/api/sessions/{session_id}/save", status_code=201)
    def save_session(session_id: str, body: SaveRequest | None = None) -> dict[str, Any]:
        session = registry.get(session_id)
        label = body.label if body is not None else None
        with session.lock:
            record = store.save(session.sign, label)
            session.sign = record.sign
            return _record_summary_json(record)

    @app.get("/api/sessions/{session_id}/export")
    def export_session(session_id: str, fmt: str = "swt", crop: bool = False) -> Response:
        session = registry.get(session_id)
        return _export_response(session.sign, catalog, fmt, crop)

    # -- stored signs --------------------------------------------------------

    @app.get("/api/signs")
    def list_signs(
        offset: int = Query(default=0, ge=0),
        limit: int = Query(default=PAGE_LIMIT_DEFAULT, ge=1, le=PAGE_LIMIT_MAX),
    ) -> dict[str, Any]:
        page = store.list_signs(offset, limit)
        return {
            "signs": [
                {
                    "id": s.id,
                    "label": s.label,
                    "saved_at": s.saved_at.strftime("%Y-%m-%dT%H:%M:%SZ"),
                    "glyph_count": s.glyph_count,
                }
                for s in page
            ],
            "total": store.sign_total,
            "offset": offset,
            "limit": limit,
        }

    @app.get("/api/signs/{record_id}")
    def get_sign(record_id: str) -> dict[str, Any]:
        return _record_json(store.load(record_id))

    @app.get("/api/signs/{record_id}/export")
    def export_sign(record_id: str, fmt: str = "swt", crop: bool = False) -> Response:
        record = store.load(record_id)
        return _export_response(record.sign, catalog, fmt, crop)

    @app.get("/api/health")
    def health() -> dict[str, Any]:
        return {
            "version": __version__,
            "catalog": catalog.name,
            "sign_total": store.sign_total,
        }

    if config.static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        static = Path(config.static_dir)
        if not static.is_dir():
            raise SwiftSignError(f"static dir {static} does not exist")
        app.mount("/", StaticFiles(directory=static, html=True), name="ui")

    return app
