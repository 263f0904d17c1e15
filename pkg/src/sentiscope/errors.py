"""Exception hierarchy shared across the package."""

from __future__ import annotations


class SentiscopeError(Exception):
    """Base class for every error this package raises on purpose."""


class LexiconError(SentiscopeError):
    pass


class LexiconFormatError(LexiconError):
    """A lexicon file line that cannot be parsed."""

    def __init__(self, path: object, line_no: int, message: str) -> None:
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


class LexiconInvariantError(LexiconError):
    """A parsed entry that violates the lexicon's invariants."""

    def __init__(self, entry: str, message: str) -> None:
        super().__init__(f"entry {entry!r}: {message}")
        self.entry = entry


class EmptyLexiconError(LexiconError):
    pass


class CorpusError(SentiscopeError):
    pass


class CorpusFormatError(CorpusError):
    def __init__(self, path: object, line_no: int, message: str) -> None:
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no


class EmptyCorpusError(CorpusError):
    pass


class MissingClassError(SentiscopeError):
    """Training data lacks an example of a required class."""

    def __init__(self, label: str) -> None:
        super().__init__(f"training corpus has no {label!r} example")
        self.label = label


class ZeroBaselineError(SentiscopeError):
    """A mood baseline of zero makes the relative change undefined."""

    def __init__(self, mood: str) -> None:
        super().__init__(f"baseline for mood {mood!r} must be > 0")
        self.mood = mood


class EnsembleError(SentiscopeError):
    pass


class UnknownMethodError(SentiscopeError):
    def __init__(self, method: str) -> None:
        super().__init__(f"unknown method {method!r}")
        self.method = method
