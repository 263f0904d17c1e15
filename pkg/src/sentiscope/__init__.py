"""sentiscope: multi-method sentiment polarity analysis and comparison."""

from .engine import AnalysisEngine, MethodInfo
from .text import Message, Token, TokenKind, ngrams, normalize, tokenize
from .verdicts import Polarity, Verdict

__version__ = "0.1.0"

__all__ = [
    "AnalysisEngine",
    "Message",
    "MethodInfo",
    "Polarity",
    "Token",
    "TokenKind",
    "Verdict",
    "ngrams",
    "normalize",
    "tokenize",
    "__version__",
]
