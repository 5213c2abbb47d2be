"""HTTP/JSON service exposing the analysis engine.

Stateless by design: the lexicon is loaded once at startup and shared
read-only, every request is analyzed independently.  The analyze
response body is produced by the same serializer as the CLI, so both
surfaces emit identical JSON.

Endpoints:
    POST /analyze   {text, keywords?, topN?, profile?} -> full report
    GET  /health    -> {"status": "ok", "bankSize": N}
"""

from __future__ import annotations

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .errors import EmptyTextError
from .lexicon import Lexicon, load_lexicon
from .report import DEFAULT_TOP_N, build_report, render_json

MAX_BODY_BYTES = 2 * 1024 * 1024  # reject anything larger with 413


class AnalyzeRequest(BaseModel):
    """Body of POST /analyze."""

    text: str
    keywords: list[str] | None = None
    topN: int = Field(default=DEFAULT_TOP_N, ge=1)
    profile: str = Field(default="adapted", pattern="^(adapted|original)$")


class HealthResponse(BaseModel):
    status: str
    bankSize: int


def create_app(lexicon: Lexicon | None = None, cors_origin: str = "*") -> FastAPI:
    """Build the service around one shared, immutable lexicon."""
    lex = lexicon if lexicon is not None else load_lexicon()
    app = FastAPI(title="alt-readability", docs_url=None, redoc_url=None)

    app.add_middleware(
        CORSMiddleware,
        allow_origins=[cors_origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.middleware("http")
    async def limit_body(request: Request, call_next):
        length = request.headers.get("content-length")
        if length and length.isdigit() and int(length) > MAX_BODY_BYTES:
            return _error(413, "request body exceeds the 2 MiB limit")
        if request.method == "POST":
            body = await request.body()
            if len(body) > MAX_BODY_BYTES:
                return _error(413, "request body exceeds the 2 MiB limit")
        return await call_next(request)

    @app.exception_handler(RequestValidationError)
    async def malformed(request: Request, exc: RequestValidationError):
        return _error(400, "malformed request body", detail=exc.errors())

    @app.exception_handler(EmptyTextError)
    async def empty_text(request: Request, exc: EmptyTextError):
        return _error(422, "text contains no analyzable content")

    @app.post("/analyze")
    async def analyze(payload: AnalyzeRequest) -> Response:
        report = build_report(
            payload.text,
            lex,
            keywords=payload.keywords,
            top_n=payload.topN,
            include_original=payload.profile == "original",
        )
        return Response(
            content=render_json(report),
            media_type="application/json; charset=utf-8",
        )

    @app.get("/health")
    async def health() -> HealthResponse:
        return HealthResponse(status="ok", bankSize=lex.bank_size)

    return app


def _error(status: int, message: str, detail=None) -> JSONResponse:
    body = {"error": message}
    if detail is not None:
        body["detail"] = detail
    return JSONResponse(status_code=status, content=body)
