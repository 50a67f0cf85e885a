"""Read-only HTTP facade over a loaded corpus for the explorer UI.

Every endpoint is a thin wrapper over the corresponding library call on
an immutable index; corpus changes happen by re-ingesting and
restarting. Responses for a given parameter bundle are computed once and
byte-cached (LRU, lock-guarded), so identical queries return identical
bodies and concurrent readers never observe partial results.
"""

from __future__ import annotations

import json
import threading
from collections import OrderedDict
from pathlib import Path
from typing import Callable

from fastapi import FastAPI, Request
from fastapi.responses import FileResponse, HTMLResponse, Response

from aksara import aligner, graph, similarity
from aksara.corpus import CorpusIndex
from aksara.normalizer import NormalizationProfile
from aksara.shingler import ShingleParamError, ShingleParams

DEFAULT_CACHE_SIZE = 256

# Skip-gram enumeration grows like (k+1)^(n-1) per position; reject query
# bundles that could stall the service. Library callers are not limited.
MAX_SKIP_WINDOWS = 100_000

_FALLBACK_PAGE = """<!doctype html>
<html><head><meta charset="utf-8"><title>aksara</title></head>
<body><h1>aksara API</h1>
<p>The explorer UI is not built. API endpoints live under <code>/api/</code>:
corpus, document/{id}, matrix, mst, compare.</p></body></html>
"""


class ApiError(Exception):
    """Maps to a non-2xx response: status, machine code, human message."""

    def __init__(self, status: int, code: str, message: str) -> None:
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


class _LruCache:
    """Tiny thread-safe LRU keyed by query-bundle strings, values are bytes."""

    def __init__(self, capacity: int) -> None:
        self.capacity = capacity
        self._lock = threading.Lock()
        self._data: OrderedDict[str, bytes] = OrderedDict()

    def get_or_compute(self, key: str, compute: Callable[[], bytes]) -> bytes:
        with self._lock:
            if key in self._data:
                self._data.move_to_end(key)
                return self._data[key]
        value = compute()
        with self._lock:
            if key not in self._data:
                self._data[key] = value
                if len(self._data) > self.capacity:
                    self._data.popitem(last=False)
            self._data.move_to_end(key)
            return self._data[key]


def _json_bytes(payload: dict) -> bytes:
    return (json.dumps(payload, ensure_ascii=False, sort_keys=True) + "\n").encode("utf-8")


def _parse_int(raw: str | None, name: str, default: int) -> int:
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ApiError(400, f"invalid-{name}", f"{name} must be an integer, got {raw!r}")


def _parse_params(request: Request) -> ShingleParams:
    q = request.query_params
    n = _parse_int(q.get("n"), "n", 4)
    k = _parse_int(q.get("k"), "k", 0)
    mode = q.get("mode") or "contiguous"
    unit = q.get("unit") or "aksara"
    try:
        params = ShingleParams(n=n, mode=mode, k=k, unit=unit)
    except ShingleParamError as exc:
        raise ApiError(400, f"invalid-{exc.field}", str(exc))
    if params.mode == "skip" and (params.k + 1) ** (params.n - 1) > MAX_SKIP_WINDOWS:
        raise ApiError(
            400,
            "invalid-params",
            "skip-gram enumeration too large for a service query; lower n or k",
        )
    return params


def _parse_metric(request: Request) -> str:
    metric = request.query_params.get("metric") or similarity.DICE
    if metric not in similarity.METRICS:
        raise ApiError(
            400, "invalid-metric", f"metric must be one of {similarity.METRICS}, got {metric!r}"
        )
    return metric


def create_app(
    index: CorpusIndex,
    static_dir: str | Path | None = None,
    profile: NormalizationProfile | None = None,
    cache_size: int = DEFAULT_CACHE_SIZE,
) -> FastAPI:
    """Build the API over one ingested corpus."""
    if profile is None:
        profile = getattr(index, "default_profile", None) or NormalizationProfile.default()
    cache = _LruCache(cache_size)
    app = FastAPI(title="aksara", docs_url=None, redoc_url=None)
    static_root = Path(static_dir) if static_dir else None

    @app.exception_handler(ApiError)
    async def _api_error(_request: Request, exc: ApiError) -> Response:
        body = _json_bytes(
            {"status": exc.status, "code": exc.code, "message": exc.message}
        )
        return Response(content=body, status_code=exc.status, media_type="application/json")

    def _json_response(body: bytes) -> Response:
        return Response(content=body, media_type="application/json")

    @app.get("/api/corpus")
    def api_corpus() -> Response:
        def build() -> bytes:
            return _json_bytes(
                {
                    "documents": [
                        {
                            "id": rec.id,
                            "title": rec.title,
                            "language": rec.language,
                            "century": rec.century,
                            "notes": rec.notes,
                        }
                        for rec in index.records.values()
                    ]
                }
            )

        return _json_response(cache.get_or_compute("corpus", build))

    @app.get("/api/document/{document_id}")
    def api_document(document_id: str) -> Response:
        if document_id not in index.records:
            raise ApiError(404, "unknown-document", f"no document {document_id!r}")

        def build() -> bytes:
            stream = index.stream(document_id)
            return _json_bytes(
                {
                    "id": document_id,
                    "text": stream.text,
                    "aksaras": [
                        {
                            "surface": a.surface,
                            "start": a.span.start,
                            "end": a.span.end,
                            "degenerate": a.degenerate,
                        }
                        for a in stream.aksaras
                    ],
                }
            )

        return _json_response(cache.get_or_compute(f"document|{document_id}", build))

    @app.get("/api/matrix")
    def api_matrix(request: Request) -> Response:
        params = _parse_params(request)
        metric = _parse_metric(request)
        combine = request.query_params.get("combine") or None
        if combine not in (None, "mean"):
            raise ApiError(400, "invalid-combine", "combine must be omitted or 'mean'")
        key = f"matrix|{params.cache_token()}|{metric}|{combine}"

        def build() -> bytes:
            m = similarity.similarity_matrix(index, params, profile, metric, combine)
            return _json_bytes(m.to_dict())

        return _json_response(cache.get_or_compute(key, build))

    @app.get("/api/mst")
    def api_mst(request: Request) -> Response:
        params = _parse_params(request)
        metric = _parse_metric(request)
        combine = request.query_params.get("combine") or None
        if combine not in (None, "mean"):
            raise ApiError(400, "invalid-combine", "combine must be omitted or 'mean'")
        key = f"mst|{params.cache_token()}|{metric}|{combine}"

        def build() -> bytes:
            m = similarity.similarity_matrix(index, params, profile, metric, combine)
            tree = graph.minimum_spanning_tree(m, index.records)
            return _json_bytes(graph.tree_to_dict(tree))

        return _json_response(cache.get_or_compute(key, build))

    @app.get("/api/compare")
    def api_compare(request: Request) -> Response:
        params = _parse_params(request)
        doc_a = request.query_params.get("a")
        doc_b = request.query_params.get("b")
        if not doc_a or not doc_b:
            raise ApiError(400, "missing-document", "query needs a= and b= document ids")
        for doc_id in (doc_a, doc_b):
            if doc_id not in index.records:
                raise ApiError(404, "unknown-document", f"no document {doc_id!r}")
        key = f"compare|{doc_a}|{doc_b}|{params.cache_token()}"

        def build() -> bytes:
            report = aligner.compare(index, doc_a, doc_b, params, profile)
            payload = aligner.report_to_dict(report)
            payload["textA"] = index.text(doc_a)
            payload["textB"] = index.text(doc_b)
            payload["titleA"] = index.record(doc_a).title
            payload["titleB"] = index.record(doc_b).title
            return _json_bytes(payload)

        return _json_response(cache.get_or_compute(key, build))

    @app.get("/")
    def root() -> Response:
        if static_root is not None:
            page = static_root / "index.html"
            if page.exists():
                return FileResponse(page)
        return HTMLResponse(_FALLBACK_PAGE)

    @app.get("/assets/{asset_path:path}")
    def assets(asset_path: str) -> Response:
        if static_root is None:
            raise ApiError(404, "no-assets", "explorer UI is not built")
        target = (static_root / "assets" / asset_path).resolve()
        root = (static_root / "assets").resolve()
        if not str(target).startswith(str(root)) or not target.is_file():
            raise ApiError(404, "unknown-asset", f"no asset {asset_path!r}")
        return FileResponse(target)

    return app


def serve(
    index: CorpusIndex,
    port: int = 8000,
    host: str = "127.0.0.1",
    static_dir: str | Path | None = None,
) -> None:
    """Run the API with uvicorn (blocking)."""
    import uvicorn

    uvicorn.run(create_app(index, static_dir=static_dir), host=host, port=port)
