"""HTTP/JSON facade: query expansion, explorer sessions, scholar search.

Responses are serialized with a fixed, compact encoder so identical state
always produces identical bytes; GET responses carry a strong ETag derived
from the body. Sessions are the only mutable state.
"""

from __future__ import annotations

import hashlib
import json
import os

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import explorer
from .config import ServiceConfig
from .errors import (
    EmptyQueryError,
    ExplorerError,
    ScholarVizError,
    UnknownConceptError,
    UnknownSessionError,
)
from .explorer import ExplorerGraph, NodeKind, SessionStore
from .layout import LayoutMode, Point, compute_layout
from .query import ResultKind, classify_concept, expand_query, resolve_expansion
from .scholars import ScholarQuery, load_scholars_file
from .taxonomy import load_taxonomy_file


def _encode(payload: dict) -> bytes:
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def _json(payload: dict, status_code: int = 200, etag: bool = False) -> Response:
    body = _encode(payload)
    headers = {}
    if etag:
        headers["ETag"] = f'"{hashlib.sha256(body).hexdigest()}"'
    return Response(
        content=body, status_code=status_code, media_type="application/json", headers=headers
    )


def _error(status_code: int, kind: str, message: str) -> Response:
    return _json({"error": {"type": kind, "message": message}}, status_code=status_code)


class SessionCreate(BaseModel):
    q: str | None = None
    concept_id: str | None = None
    mode: str = "radial"


class PointBody(BaseModel):
    x: float
    y: float


class EventBody(BaseModel):
    type: str
    node: str | None = None
    point: PointBody | None = None
    mode: str | None = None


def create_app(config: ServiceConfig) -> FastAPI:
    config.validate()
    for path in (config.taxonomy_path, config.scholars_path):
        if not os.path.exists(path):
            raise FileNotFoundError(f"data file not found: {path}")

    taxonomy = load_taxonomy_file(config.taxonomy_path)
    scholar_index = load_scholars_file(config.scholars_path)
    store = SessionStore(capacity=config.session_capacity)

    app = FastAPI(title="scholarviz", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.config = config
    app.state.taxonomy = taxonomy
    app.state.scholars = scholar_index
    app.state.sessions = store

    @app.exception_handler(RequestValidationError)
    async def _validation_handler(request: Request, exc: RequestValidationError) -> Response:
        return _error(400, "malformed_request", str(exc.errors()[:1]))

    @app.exception_handler(ScholarVizError)
    async def _domain_handler(request: Request, exc: ScholarVizError) -> Response:
        if isinstance(exc, (UnknownSessionError, UnknownConceptError)):
            return _error(404, type(exc).__name__, str(exc))
        if isinstance(exc, ExplorerError):
            return _error(409, type(exc).__name__, str(exc))
        return _error(400, type(exc).__name__, str(exc))

    def _mode_of(name: str) -> LayoutMode:
        try:
            return LayoutMode(name)
        except ValueError:
            raise ExplorerError(f"unknown layout mode: {name!r}") from None

    def _session_payload(graph: ExplorerGraph) -> dict:
        layout = compute_layout(
            graph.layout_input(config.canvas, config.seed), graph.layout_mode, config.layout
        )
        return {
            "session_id": graph.session_id,
            "snapshot": graph.to_dict(),
            "layout": {
                "mode": graph.layout_mode.value,
                "canvas": {"width": config.canvas[0], "height": config.canvas[1]},
                **layout.to_dict(),
            },
        }

    @app.get("/healthz")
    def healthz() -> Response:
        return _json(
            {
                "status": "ok",
                "concepts": len(taxonomy),
                "scholars": len(scholar_index.scholars),
            },
            etag=True,
        )

    @app.get("/api/expand")
    def api_expand(q: str = "", page_size: int | None = None) -> Response:
        size = page_size if page_size and page_size > 0 else config.page_size
        result = expand_query(q, taxonomy, size)  # raises EmptyQueryError -> 400
        return _json(result.to_dict(), etag=True)

    @app.get("/api/resolve")
    def api_resolve(choice: str = "") -> Response:
        result = resolve_expansion(choice, taxonomy, config.page_size)
        return _json(result.to_dict(), etag=True)

    @app.post("/api/session")
    def api_session_create(body: SessionCreate) -> Response:
        mode = _mode_of(body.mode)
        if body.concept_id is not None:
            if body.concept_id not in taxonomy.concepts:
                raise UnknownConceptError(body.concept_id)
            result = classify_concept(taxonomy, body.concept_id, config.page_size)
        elif body.q is not None:
            result = expand_query(body.q, taxonomy, config.page_size)
            if result.kind is ResultKind.NOT_FOUND:
                return _error(404, "not_found", f"no concept matches {result.query!r}")
        else:
            return _error(400, "malformed_request", "provide 'q' or 'concept_id'")
        graph = explorer.start_session(result, mode, config.page_size)
        store.add(graph)
        return _json(_session_payload(graph))

    @app.get("/api/session/{session_id}")
    def api_session_get(session_id: str) -> Response:
        session = store.get(session_id)
        with session.lock:
            payload = _session_payload(session.graph)
        body = _encode(payload)
        return Response(
            content=body,
            media_type="application/json",
            headers={"ETag": f'"{hashlib.sha256(body).hexdigest()}"'},
        )

    @app.post("/api/session/{session_id}/event")
    def api_session_event(session_id: str, body: EventBody) -> Response:
        session = store.get(session_id)
        with session.lock:
            graph = session.graph
            if body.type in ("click", "more"):
                if body.node is None:
                    return _error(400, "malformed_request", "event needs 'node'")
                if body.type == "more" and graph.node(body.node).kind is not NodeKind.MORE:
                    raise ExplorerError(f"node {body.node!r} is not a MORE node")
                graph = explorer.click(graph, body.node, taxonomy, config.page_size)
            elif body.type == "dblclick":
                if body.node is None:
                    return _error(400, "malformed_request", "event needs 'node'")
                graph = explorer.double_click(graph, body.node, taxonomy, config.page_size)
            elif body.type == "set_mode":
                if body.mode is None:
                    return _error(400, "malformed_request", "set_mode needs 'mode'")
                graph = explorer.set_mode(graph, _mode_of(body.mode))
            elif body.type == "pin":
                if body.node is None or body.point is None:
                    return _error(400, "malformed_request", "pin needs 'node' and 'point'")
                graph = explorer.pin_node(
                    graph, body.node, Point(body.point.x, body.point.y), config.canvas
                )
            elif body.type == "unpin":
                if body.node is None:
                    return _error(400, "malformed_request", "unpin needs 'node'")
                graph = explorer.unpin_node(graph, body.node)
            else:
                return _error(400, "malformed_request", f"unknown event type {body.type!r}")
            session.graph = graph
            return _json(_session_payload(graph))

    @app.get("/api/scholars")
    def api_scholars(keywords: str = "", offset: int = 0, limit: int = 10) -> Response:
        terms = tuple(part.strip() for part in keywords.split(",") if part.strip())
        if not terms:
            return _error(400, "malformed_request", "provide comma-separated 'keywords'")
        try:
            query = ScholarQuery(keywords=terms, offset=offset, limit=limit)
        except ValueError as exc:
            return _error(400, "malformed_request", str(exc))
        page, total = scholar_index.search(query)
        return _json(
            {
                "items": [
                    {**record.to_dict(), "score": round(score, 9)} for record, score in page
                ],
                "total": total,
                "offset": query.offset,
                "limit": query.limit,
            },
            etag=True,
        )

    static_dir = os.environ.get("SCHOLARVIZ_STATIC", "frontend/dist")
    if os.path.isdir(static_dir):
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
