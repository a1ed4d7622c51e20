"""HTTP/JSON API over the session store.

Exposes the built-in taxonomy, session lifecycle (create, list, fetch,
full-document replacement with optimistic concurrency), evaluation,
ephemeral what-if exploration and sensitivity analytics. Stateless above
the file-backed store; handlers share nothing but the store itself.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Optional, Sequence, Union

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from . import __version__
from .elicitation import to_score_input
from .engine import sensitivity, whatif
from .errors import (
    AggregationError,
    ConflictError,
    DomainError,
    ElicitationError,
    IntegrityError,
    MigrationError,
    RangeError,
    TaxonomyValidationError,
    UnknownFactorError,
    WaingeError,
)
from .store import (
    SessionStore,
    new_session,
    result_to_doc,
    sensitivity_to_doc,
    session_from_doc,
    session_to_doc,
    taxonomy_from_doc,
    taxonomy_to_doc,
)
from .taxonomy import builtin_taxonomy, validate_taxonomy


class _ApiError(WaingeError):
    """Carries an explicit HTTP status and machine code to the error handler."""

    def __init__(self, status: int, code: str, message: str, details=None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.details = details


def _error_payload(status: int, code: str, message: str, details=None) -> JSONResponse:
    body = {"status": status, "code": code, "message": message}
    if details is not None:
        body["details"] = details
    return JSONResponse(body, status_code=status)


def _map_error(exc: WaingeError) -> JSONResponse:
    if isinstance(exc, _ApiError):
        return _error_payload(exc.status, exc.code, str(exc), exc.details)
    if isinstance(exc, ConflictError):
        return _error_payload(409, "conflict", str(exc))
    if isinstance(exc, IntegrityError):
        return _error_payload(422, "integrity", str(exc), {"offenders": exc.offenders})
    if isinstance(exc, UnknownFactorError):
        return _error_payload(422, "integrity", str(exc))
    if isinstance(exc, MigrationError):
        return _error_payload(422, "migration", str(exc))
    if isinstance(exc, RangeError):
        return _error_payload(422, "range", str(exc))
    if isinstance(exc, ElicitationError):
        return _error_payload(422, "elicitation", str(exc))
    if isinstance(exc, TaxonomyValidationError):
        return _error_payload(
            422, "validation", str(exc), {"violations": [str(v) for v in exc.violations]}
        )
    if isinstance(exc, (AggregationError, DomainError)):
        return _error_payload(422, "validation", str(exc))
    return _error_payload(500, "internal", str(exc))


async def _json_body(request: Request, allow_empty: bool = False):
    raw = await request.body()
    if not raw:
        if allow_empty:
            return {}
        raise _ApiError(400, "bad_request", "request body must be JSON")
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise _ApiError(400, "bad_request", f"request body is not valid JSON: {exc}")


def _session_summary(session) -> dict:
    return {
        "id": session.id,
        "title": session.title,
        "revision": session.revision,
        "created_at": session.created_at,
        "updated_at": session.updated_at,
    }


def create_app(
    data_dir: Union[str, Path],
    allow_origins: Optional[Sequence[str]] = None,
) -> FastAPI:
    """Build the service bound to one session directory.

    ``allow_origins`` defaults to the permissive ``["*"]`` for development;
    pass an explicit allowlist in production.
    """
    store = SessionStore(data_dir)
    app = FastAPI(title="wainge", version=__version__)
    app.state.store = store
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(allow_origins) if allow_origins is not None else ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
        expose_headers=["ETag", "X-Session-Revision", "Location"],
    )

    taxonomy_body = json.dumps(
        taxonomy_to_doc(builtin_taxonomy()), ensure_ascii=False
    ).encode("utf-8")
    taxonomy_etag = '"' + hashlib.sha256(taxonomy_body).hexdigest() + '"'

    @app.exception_handler(WaingeError)
    async def wainge_error_handler(request: Request, exc: WaingeError):
        return _map_error(exc)

    def _get_or_404(session_id: str):
        try:
            return store.get(session_id)
        except KeyError:
            raise _ApiError(404, "not_found", f"session {session_id!r} not found")

    @app.get("/taxonomy")
    async def get_taxonomy(request: Request) -> Response:
        if request.headers.get("if-none-match") == taxonomy_etag:
            return Response(status_code=304, headers={"ETag": taxonomy_etag})
        return Response(
            content=taxonomy_body,
            media_type="application/json",
            headers={"ETag": taxonomy_etag},
        )

    @app.get("/sessions")
    async def list_sessions() -> JSONResponse:
        summaries = [_session_summary(store.get(sid)) for sid in store.ids()]
        return JSONResponse(summaries)

    @app.post("/sessions")
    async def create_session(request: Request) -> JSONResponse:
        body = await _json_body(request, allow_empty=True)
        if not isinstance(body, dict):
            raise _ApiError(400, "bad_request", "request body must be a JSON object")
        unknown = set(body) - {"title", "taxonomy", "id"}
        if unknown:
            raise _ApiError(
                400, "bad_request", f"unknown fields: {sorted(unknown)}"
            )
        title = body.get("title", "")
        if not isinstance(title, str):
            raise _ApiError(400, "bad_request", "field 'title' must be a string")
        session_id = body.get("id")
        if session_id is not None and not isinstance(session_id, str):
            raise _ApiError(400, "bad_request", "field 'id' must be a string")
        if body.get("taxonomy") is not None:
            taxonomy = taxonomy_from_doc(body["taxonomy"])
            violations = validate_taxonomy(taxonomy)
            if violations:
                raise TaxonomyValidationError(violations)
        else:
            taxonomy = builtin_taxonomy()
        session = new_session(title, taxonomy, session_id=session_id)
        store.create(session)
        return JSONResponse(
            session_to_doc(session),
            status_code=201,
            headers={
                "Location": f"/sessions/{session.id}",
                "X-Session-Revision": str(session.revision),
            },
        )

    @app.get("/sessions/{session_id}")
    async def get_session(session_id: str) -> JSONResponse:
        session = _get_or_404(session_id)
        return JSONResponse(
            session_to_doc(session),
            headers={"X-Session-Revision": str(session.revision)},
        )

    @app.put("/sessions/{session_id}")
    async def put_session(session_id: str, request: Request) -> JSONResponse:
        header = request.headers.get("x-session-revision")
        if header is None:
            raise _ApiError(
                400,
                "missing_revision",
                "PUT requires the X-Session-Revision header carrying the "
                "revision the edit was based on",
            )
        try:
            expected_revision = int(header)
        except ValueError:
            raise _ApiError(
                400, "bad_request", f"X-Session-Revision must be an integer, got {header!r}"
            )
        body = await _json_body(request)
        updated = session_from_doc(body)
        if updated.id != session_id:
            raise IntegrityError(
                [f"document id {updated.id!r} does not match URL id {session_id!r}"]
            )
        _get_or_404(session_id)
        committed = store.commit(updated, expected_revision)
        return JSONResponse(
            session_to_doc(committed),
            headers={"X-Session-Revision": str(committed.revision)},
        )

    @app.get("/sessions/{session_id}/result")
    async def get_result(session_id: str) -> JSONResponse:
        session = _get_or_404(session_id)
        result = store.result_for(session)
        return JSONResponse(result_to_doc(result))

    @app.post("/sessions/{session_id}/whatif")
    async def post_whatif(session_id: str, request: Request) -> JSONResponse:
        session = _get_or_404(session_id)
        body = await _json_body(request, allow_empty=True)
        if not isinstance(body, dict):
            raise _ApiError(400, "bad_request", "request body must be a JSON object")
        unknown = set(body) - {"weights", "ava"}
        if unknown:
            raise _ApiError(400, "bad_request", f"unknown fields: {sorted(unknown)}")
        weights = body.get("weights")
        if weights is not None:
            if not isinstance(weights, dict):
                raise _ApiError(400, "bad_request", "field 'weights' must be an object")
            for factor_id, value in weights.items():
                if not isinstance(value, (int, float)) or isinstance(value, bool):
                    raise RangeError(
                        f"factor {factor_id}: weight {value!r} is not a number"
                    )
        ava = body.get("ava")
        if ava is not None and (
            not isinstance(ava, (int, float)) or isinstance(ava, bool)
        ):
            raise RangeError(f"ava {ava!r} is not a number")
        score_input = to_score_input(session)
        result = whatif(score_input, session.config, weights=weights, ava=ava)
        doc = result_to_doc(result)
        doc["ephemeral"] = True
        return JSONResponse(doc)

    @app.get("/sessions/{session_id}/sensitivity")
    async def get_sensitivity(session_id: str) -> JSONResponse:
        session = _get_or_404(session_id)
        score_input = to_score_input(session)
        report = sensitivity(score_input, session.config)
        return JSONResponse(
            sensitivity_to_doc(report, session.taxonomy.factor_ids())
        )

    return app
