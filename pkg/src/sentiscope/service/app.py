"""The HTTP JSON API: per-method and combined analysis for short texts.

All lexicons and models are loaded once at startup; request handling is
read-only, so concurrent requests need no locking.  The response schema is
versioned under /api/v1.
"""

from __future__ import annotations

import time
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles

from ..engine import AnalysisEngine
from ..ensemble import EnsembleConfig, Strategy, load_ensemble_config
from ..errors import SentiscopeError, UnknownMethodError
from .schemas import (
    AnalyzeRequest,
    AnalyzeResponse,
    MethodRecord,
    ServiceConfig,
    VerdictRecord,
)

API_PREFIX = "/api/v1"


def _error(status_code: int, code: str, message: str) -> HTTPException:
    return HTTPException(status_code=status_code, detail={"code": code, "message": message})


def _default_ui_dir() -> Optional[Path]:
    # Editable installs keep the UI bundle next to src/; absent otherwise.
    candidate = Path(__file__).resolve().parents[3] / "frontend" / "dist"
    return candidate if candidate.is_dir() else None


def create_app(config: Optional[ServiceConfig] = None) -> FastAPI:
    cfg = config or ServiceConfig()
    engine = AnalysisEngine(cfg.lexicon_dir)
    ensembles: dict[str, Optional[EnsembleConfig]] = {"default": engine.default_ensemble}
    if cfg.ensemble_config:
        ensembles["default"] = load_ensemble_config(cfg.ensemble_config)
    for name, path in cfg.ensembles.items():
        ensembles[name] = load_ensemble_config(path)

    app = FastAPI(title="sentiscope", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.engine = engine
    app.state.config = cfg

    @app.get(f"{API_PREFIX}/methods", response_model=list[MethodRecord])
    def list_methods() -> list[MethodRecord]:
        return [
            MethodRecord(id=m.id, description=m.description, lexicon_loaded=m.ready)
            for m in engine.method_infos()
        ]

    @app.post(f"{API_PREFIX}/analyze", response_model=AnalyzeResponse)
    def analyze(request: AnalyzeRequest) -> AnalyzeResponse:
        if not request.text.strip():
            raise _error(400, "empty_text", "text must not be empty")
        if len(request.text) > cfg.max_text_length:
            raise _error(
                400,
                "text_too_long",
                f"text exceeds the {cfg.max_text_length}-character limit",
            )
        if request.methods is not None and not request.methods:
            raise _error(400, "no_methods", "the method list must not be empty")
        ensemble_name = request.ensemble or "default"
        if ensemble_name not in ensembles:
            raise _error(404, "unknown_ensemble", f"no ensemble named {ensemble_name!r}")
        started = time.perf_counter()
        try:
            verdicts = engine.analyze(request.text, request.methods)
        except UnknownMethodError as error:
            raise _error(404, "unknown_method", str(error)) from None
        except SentiscopeError as error:
            raise _error(404, "method_not_ready", str(error)) from None
        strategy = Strategy(request.strategy) if request.strategy else None
        combined_cfg = engine.ensemble_for(
            selected=request.methods,
            base=ensembles[ensemble_name],
            strategy=strategy,
        )
        combined = engine.combined(verdicts, combined_cfg) if combined_cfg else None
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        return AnalyzeResponse(
            verdicts=[VerdictRecord.from_verdict(v) for v in verdicts],
            combined=VerdictRecord.from_verdict(combined) if combined else None,
            elapsed_ms=elapsed_ms,
        )

    ui_dir = Path(cfg.ui_dir) if cfg.ui_dir else _default_ui_dir()
    if ui_dir is not None and ui_dir.is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
