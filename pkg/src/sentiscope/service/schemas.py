"""Pydantic request/response models and the service configuration."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field

from ..verdicts import Verdict


class AnalyzeRequest(BaseModel):
    text: str
    methods: Optional[List[str]] = None
    ensemble: Optional[str] = Field(
        default=None, description="Name of a configured ensemble (default: 'default')."
    )
    strategy: Optional[Literal["weighted-vote", "cascade"]] = None


class VerdictRecord(BaseModel):
    method: str
    polarity: str
    score: float
    detail: Optional[Dict[str, float]] = None

    @classmethod
    def from_verdict(cls, verdict: Verdict) -> "VerdictRecord":
        return cls(**verdict.to_dict())


class AnalyzeResponse(BaseModel):
    verdicts: List[VerdictRecord]
    combined: Optional[VerdictRecord]
    elapsed_ms: float


class MethodRecord(BaseModel):
    id: str
    description: str
    lexicon_loaded: bool


class ServiceConfig(BaseModel):
    host: str = "127.0.0.1"
    port: int = 8080
    max_text_length: int = 200
    lexicon_dir: Optional[str] = None
    ensemble_config: Optional[str] = None
    ensembles: Dict[str, str] = Field(
        default_factory=dict, description="Extra named ensemble config files."
    )
    ui_dir: Optional[str] = None

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "ServiceConfig":
        return cls(**json.loads(Path(path).read_text(encoding="utf-8")))
