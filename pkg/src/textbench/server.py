"""HTTP service exposing analysis, suggestions, chains, comparison, SSML,
and LLM endpoints with corpus-profile persistence.

All bodies are JSON; errors come back as ``{code, message, detail}``. The
lexicon bundle loads once at startup and is never mutated. Compute endpoints
add nothing on top of the library calls they delegate to.
"""

from __future__ import annotations

import threading
from datetime import datetime, timezone

from fastapi import Depends, FastAPI, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import compare as compare_mod
from .chains import LINKAGES, build_chains
from .config import WorkbenchConfig
from .errors import BuildInProgress, EmptyCorpus, TextbenchError
from .llm import PROMPTS, HttpChatClient, MockChatClient, RetryPolicy, simplify_one
from .metrics import AnalyzeConfig, MetricVector, analyze_tagged
from .radar_svg import render_radar_svg
from .speech import SpeechAnnotation, VoiceConfig, detect_say_as, render_ssml
from .store import ProfileStore, StoredProfile, fingerprint_paths
from .suggest import suggest_tagged
from .tagging import RuleTagger, tag_text

_STATUS_BY_CODE = {
    "zero_vector": 400,
    "span_out_of_range": 400,
    "empty_input": 400,
    "overlap": 409,
    "build_in_progress": 409,
    "unknown_profile": 404,
    "empty_corpus": 422,
    "llm_unavailable": 503,
    "llm_transient": 503,
    "parse_error": 500,
    "missing_file": 500,
    "model_missing": 500,
    "internal": 500,
}


class AnalyzeOptions(BaseModel):
    linkage: str = "exact"
    normalization_set: list[str] = Field(default_factory=list)
    threshold: float | None = None


class AnalyzeRequest(BaseModel):
    text: str
    options: AnalyzeOptions = Field(default_factory=AnalyzeOptions)


class CorpusRequest(BaseModel):
    documents: dict[str, str] | None = None
    dir: str | None = None


class SsmlRequest(BaseModel):
    text: str
    annotations: list[dict] = Field(default_factory=list)
    voice: dict | None = None
    detect: bool = False


class SuggestRequest(BaseModel):
    text: str
    threshold: float | None = None


class LlmSimplifyRequest(BaseModel):
    text: str
    prompt_id: str = "simplified"


def create_app(config: WorkbenchConfig | None = None) -> FastAPI:
    config = config or WorkbenchConfig()
    bundle = config.load_lexicon()
    tagger = RuleTagger.load(config.tagger_model) if config.tagger_model else RuleTagger.load()
    store = ProfileStore(config.profiles_dir)
    fingerprint = fingerprint_paths(config.lexicon_paths.values())
    llm_client = (
        MockChatClient()
        if config.llm.mock
        else HttpChatClient(
            base_url=config.llm.base_url,
            path=config.llm.path,
            model_id=config.llm.model_id,
            temperature=config.llm.temperature,
        )
    )
    retry_policy = RetryPolicy(max_attempts=config.llm.max_attempts)
    builds_in_progress: set[str] = set()
    builds_lock = threading.Lock()

    app = FastAPI(title="textbench", version="0.1.0")

    def require_auth(request: Request):
        if config.auth_token is None:
            return
        header = request.headers.get("authorization", "")
        if header != f"Bearer {config.auth_token}":
            raise _HttpError(401, "unauthorized", "missing or invalid bearer token")

    class _HttpError(Exception):
        def __init__(self, status: int, code: str, message: str, detail=None):
            self.status = status
            self.code = code
            self.message = message
            self.detail = detail

    @app.exception_handler(_HttpError)
    async def handle_http_error(_request, exc: _HttpError):
        return JSONResponse(
            status_code=exc.status,
            content={"code": exc.code, "message": exc.message, "detail": exc.detail},
        )

    @app.exception_handler(TextbenchError)
    async def handle_module_error(_request, exc: TextbenchError):
        status = _STATUS_BY_CODE.get(exc.code, 500)
        return JSONResponse(
            status_code=status,
            content={"code": exc.code, "message": str(exc), "detail": None},
        )

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(_request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"code": "bad_request", "message": "malformed body", "detail": exc.errors()},
        )

    @app.exception_handler(ValueError)
    async def handle_value_error(_request, exc: ValueError):
        return JSONResponse(
            status_code=400,
            content={"code": "bad_request", "message": str(exc), "detail": None},
        )

    async def enforce_body_limit(request: Request):
        length = request.headers.get("content-length")
        if length is not None and int(length) > config.max_body_bytes:
            raise _HttpError(413, "payload_too_large",
                             f"body exceeds {config.max_body_bytes} bytes")

    deps = [Depends(require_auth), Depends(enforce_body_limit)]

    def profile_vectors(names) -> dict[str, MetricVector]:
        vectors = {}
        for name in names:
            stored = store.load(name)
            vectors[name] = stored.profile.mean_vector
        return vectors

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/profiles", dependencies=deps)
    def list_profiles():
        return {"profiles": store.names()}

    @app.post("/analyze", dependencies=deps)
    def analyze_endpoint(req: AnalyzeRequest):
        if req.options.linkage not in LINKAGES:
            raise _HttpError(400, "bad_request", f"linkage must be one of {LINKAGES}")
        tagged = tag_text(req.text, tagger=tagger)
        cfg = AnalyzeConfig(linkage=req.options.linkage, tagger=tagger)
        vector = analyze_tagged(tagged, bundle, cfg)
        norm_set = {"current": vector}
        norm_set.update(profile_vectors(req.options.normalization_set))
        series = compare_mod.radar_series(vector, norm_set, name="current")
        suggestions = suggest_tagged(tagged, bundle, req.options.threshold)
        chains = build_chains(tagged, bundle, req.options.linkage)
        chain_payload = [
            {
                "linkage": c.linkage,
                "representative_lemma": c.representative_lemma,
                "first": c.first,
                "last": c.last,
                "members": [
                    {
                        "token_index": idx,
                        "start": tagged.tokens[idx].start,
                        "end": tagged.tokens[idx].end,
                        "surface": tagged.tokens[idx].surface,
                    }
                    for idx in c.member_indices
                ],
            }
            for c in chains
        ]
        return {
            "vector": vector.as_dict(),
            "radar": dict(zip(series.axes, series.values)),
            "suggestions": [s.as_dict() for s in suggestions],
            "chains": chain_payload,
        }

    @app.post("/corpora/{name}", dependencies=deps)
    def build_corpus(name: str, req: CorpusRequest):
        with builds_lock:
            if name in builds_in_progress:
                raise BuildInProgress(f"a build for {name!r} is already running")
            builds_in_progress.add(name)
        try:
            cfg = AnalyzeConfig(tagger=tagger)
            if req.documents:
                profile = compare_mod.profile_documents(name, req.documents, bundle, cfg)
            elif req.dir:
                profile = compare_mod.profile_corpus(req.dir, bundle, cfg, name=name)
            else:
                raise EmptyCorpus("request needs either documents or dir")
            stored = StoredProfile(profile, fingerprint)
            store.save(stored)
            return {
                "name": profile.name,
                "doc_count": profile.doc_count,
                "mean_vector": profile.mean_vector.as_dict(),
                "bundle_fingerprint": stored.bundle_fingerprint,
                "created_at": datetime.now(timezone.utc).isoformat(),
            }
        finally:
            with builds_lock:
                builds_in_progress.discard(name)

    @app.get("/compare", dependencies=deps)
    def compare_endpoint(
        target: str = Query(...),
        against: str = Query(...),
        convention: str = Query("include"),
        orientation: str = Query("magnitude"),
    ):
        target_stored = store.load(target)
        names = [n for n in against.split(",") if n]
        warnings = []
        corpora = {}
        for name in names:
            stored = store.load(name)
            corpora[name] = stored.profile.mean_vector
            if stored.bundle_fingerprint != target_stored.bundle_fingerprint:
                warnings.append(
                    f"profile {name!r} was built with a different lexicon bundle"
                )
        table = compare_mod.similarity_table(
            corpora,
            {target: target_stored.profile.mean_vector},
            convention=convention,
            orientation=orientation,
        )
        return {
            "target": target,
            "convention": convention,
            "orientation": orientation,
            "similarities": {name: table.cells[name][target] for name in corpora},
            "warnings": warnings,
        }

    @app.get("/radar", dependencies=deps)
    def radar_endpoint(
        profiles: str = Query(""),
        target: str | None = Query(None),
        text: str | None = Query(None),
        format: str = Query("json"),
    ):
        names = [n for n in profiles.split(",") if n]
        vectors = profile_vectors(names)
        series_vectors = dict(vectors)
        if target is not None:
            series_vectors.setdefault(target, profile_vectors([target])[target])
        if text is not None:
            tagged = tag_text(text, tagger=tagger)
            series_vectors["current"] = analyze_tagged(tagged, bundle, AnalyzeConfig(tagger=tagger))
        if not series_vectors:
            raise _HttpError(400, "bad_request", "nothing to plot")
        norm_set = dict(series_vectors)
        series = [
            compare_mod.radar_series(vec, norm_set, name=name)
            for name, vec in series_vectors.items()
        ]
        if format == "svg":
            return Response(render_radar_svg(series), media_type="image/svg+xml")
        return {
            "axes": list(series[0].axes),
            "series": {s.name: list(s.values) for s in series},
            "normalization_set": list(series[0].normalization_set),
        }

    @app.post("/ssml", dependencies=deps)
    def ssml_endpoint(req: SsmlRequest):
        annotations = [SpeechAnnotation.from_dict(a) for a in req.annotations]
        if req.detect:
            existing = list(annotations)
            for found in detect_say_as(req.text):
                if not any(
                    found.span[0] < a.span[1] and a.span[0] < found.span[1]
                    for a in existing
                    if a.kind == "say_as"
                ):
                    annotations.append(found)
        voice = VoiceConfig(**req.voice) if req.voice else None
        document = render_ssml(req.text, annotations, voice)
        return {"ssml": document, "annotations": [a.as_dict() for a in annotations]}

    @app.post("/suggest", dependencies=deps)
    def suggest_endpoint(req: SuggestRequest):
        tagged = tag_text(req.text, tagger=tagger)
        return {"suggestions": [s.as_dict() for s in suggest_tagged(tagged, bundle, req.threshold)]}

    @app.post("/llm/simplify", dependencies=deps)
    def llm_endpoint(req: LlmSimplifyRequest):
        if req.prompt_id not in PROMPTS:
            raise _HttpError(400, "bad_request", f"unknown prompt_id {req.prompt_id!r}")
        result = simplify_one(req.text, req.prompt_id, llm_client, retry_policy)
        return result.as_dict()

    return app


def run(config: WorkbenchConfig | None = None):
    import uvicorn

    config = config or WorkbenchConfig()
    uvicorn.run(create_app(config), host=config.host, port=config.port)
