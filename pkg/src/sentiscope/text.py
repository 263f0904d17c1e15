"""Tokenization and normalization of informal short texts.

Emoticons are matched literally (longest first) before any word splitting,
so a symbol like ":-)" survives as a single token instead of three
punctuation marks, and repeated punctuation such as "!!!!" stays together
for the rule-based strength method.  URLs and @mentions become `other`
tokens that no lexicon lookup ever touches.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from datetime import datetime
from enum import Enum
from typing import Optional, Sequence

_APOSTROPHES = ("'", "’")


class TokenKind(str, Enum):
    WORD = "word"
    EMOTICON = "emoticon"
    PUNCTUATION = "punctuation-run"
    NUMBER = "number"
    OTHER = "other"


@dataclass(frozen=True)
class Message:
    """One short text with an opaque id and optional provenance."""

    id: str
    text: str
    timestamp: Optional[datetime] = None
    source: Optional[str] = None


@dataclass(frozen=True)
class Token:
    surface: str
    normalized: str
    kind: TokenKind
    start: int  # offset into the text, inclusive
    end: int  # exclusive

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)


def _is_word_char(ch: str) -> bool:
    return ch.isalnum() or ch in _APOSTROPHES


def _compile_emoticon_index(patterns: Sequence[str]) -> dict[str, list[str]]:
    """Group patterns by first character, longest first, for the scan."""
    if not patterns:
        raise ValueError("emoticon pattern list must be non-empty")
    index: dict[str, list[str]] = {}
    for pat in set(patterns):
        if len(pat) < 2:
            raise ValueError(f"emoticon pattern {pat!r} is shorter than 2 characters")
        index.setdefault(pat[0], []).append(pat)
    for group in index.values():
        group.sort(key=len, reverse=True)
    return index


def _emoticon_boundary_ok(text: str, start: int, pattern: str) -> bool:
    # A pattern edge that is a letter/digit must not abut a letter/digit in
    # the text, so "Oo" never fires inside "Oops" and ":D" not in ":Dear".
    if pattern[0].isalnum() and start > 0 and text[start - 1].isalnum():
        return False
    end = start + len(pattern)
    if pattern[-1].isalnum() and end < len(text) and text[end].isalnum():
        return False
    return True


def _match_emoticon(text: str, pos: int, index: dict[str, list[str]]) -> Optional[str]:
    for pattern in index.get(text[pos], ()):
        if text.startswith(pattern, pos) and _emoticon_boundary_ok(text, pos, pattern):
            return pattern
    return None


def tokenize(text: str, emoticon_patterns: Sequence[str]) -> list[Token]:
    """Split `text` into tokens, preserving emoticons and punctuation runs.

    Scan order at each position: emoticon (longest match), URL, @mention,
    alphanumeric word, then a run of one repeated punctuation character.
    Word tokens start at a letter or digit and may contain apostrophes;
    a token of digits only is kind `number`.
    """
    index = _compile_emoticon_index(emoticon_patterns)
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        pattern = _match_emoticon(text, i, index)
        if pattern is not None:
            end = i + len(pattern)
            tokens.append(Token(pattern, pattern, TokenKind.EMOTICON, i, end))
            i = end
            continue
        lowered = text[i : i + 8].lower()
        if lowered.startswith(("http://", "https://")) or lowered.startswith("www."):
            j = i
            while j < n and not text[j].isspace():
                j += 1
            surface = text[i:j]
            tokens.append(Token(surface, surface, TokenKind.OTHER, i, j))
            i = j
            continue
        if ch == "@" and i + 1 < n and (text[i + 1].isalnum() or text[i + 1] == "_"):
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            surface = text[i:j]
            tokens.append(Token(surface, surface, TokenKind.OTHER, i, j))
            i = j
            continue
        if ch.isalnum():
            j = i + 1
            while j < n and _is_word_char(text[j]):
                j += 1
            surface = text[i:j]
            kind = TokenKind.NUMBER if surface.isdigit() else TokenKind.WORD
            tokens.append(Token(surface, surface.casefold(), kind, i, j))
            i = j
            continue
        # Run of the same punctuation character ("!!!!" is one token,
        # ":-)" outside the emoticon table would be three).
        j = i + 1
        while j < n and text[j] == ch:
            j += 1
        surface = text[i:j]
        tokens.append(Token(surface, surface, TokenKind.PUNCTUATION, i, j))
        i = j
    return tokens


def normalize(token: Token) -> Token:
    """Return the token with its normalized form re-derived (idempotent)."""
    if token.kind in (TokenKind.WORD,):
        return replace(token, normalized=token.surface.casefold())
    return replace(token, normalized=token.surface)


def ngrams(tokens: Sequence[Token], n: int) -> list[tuple[str, tuple[int, int]]]:
    """All contiguous word n-grams, space-joined, with their text spans.

    Only word tokens participate; any other token kind breaks contiguity.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    grams: list[tuple[str, tuple[int, int]]] = []
    run: list[Token] = []
    for token in list(tokens) + [None]:  # type: ignore[list-item]
        if token is not None and token.kind is TokenKind.WORD:
            run.append(token)
            continue
        for k in range(len(run) - n + 1):
            group = run[k : k + n]
            grams.append(
                (
                    " ".join(t.normalized for t in group),
                    (group[0].start, group[-1].end),
                )
            )
        run = []
    return grams
