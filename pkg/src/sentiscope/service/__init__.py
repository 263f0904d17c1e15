from .app import create_app
from .schemas import AnalyzeRequest, AnalyzeResponse, MethodRecord, ServiceConfig, VerdictRecord

__all__ = [
    "AnalyzeRequest",
    "AnalyzeResponse",
    "MethodRecord",
    "ServiceConfig",
    "VerdictRecord",
    "create_app",
]
