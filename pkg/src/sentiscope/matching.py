"""Token-aligned multi-pattern matching for all word-based lexicons.

Three pattern forms share one matcher:

  - exact words, matched against whole normalized tokens,
  - stems ("happi*"), matched as prefixes of normalized word tokens,
  - multiword phrases, matched against contiguous word-token runs.

The scan is leftmost-first and longest-first: phrases beat their
constituent words, exact patterns beat stems, longer stems beat shorter
ones, and tokens consumed by a phrase are not re-matched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence

from .text import Token, TokenKind


@dataclass(frozen=True)
class Match:
    pattern: str
    payload: Any
    start: int  # character span of the matched tokens
    end: int
    token_index: int
    token_count: int

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)


class _StemTrie:
    """Character trie over stem prefixes; lookup keeps the longest hit."""

    __slots__ = ("children", "terminal")

    def __init__(self) -> None:
        self.children: dict[str, _StemTrie] = {}
        self.terminal: Optional[tuple[str, Any]] = None

    def insert(self, stem: str, pattern: str, payload: Any) -> None:
        node = self
        for ch in stem:
            node = node.children.setdefault(ch, _StemTrie())
        node.terminal = (pattern, payload)

    def longest(self, word: str) -> Optional[tuple[str, Any]]:
        node = self
        best = node.terminal
        for ch in word:
            node = node.children.get(ch)
            if node is None:
                break
            if node.terminal is not None:
                best = node.terminal
        return best


class CompiledMatcher:
    """Immutable matcher compiled from (pattern, payload) pairs."""

    def __init__(self, patterns: Iterable[tuple[str, Any]]) -> None:
        self._exact: dict[str, tuple[str, Any]] = {}
        self._stems = _StemTrie()
        self._phrases: dict[str, list[tuple[tuple[str, ...], str, Any]]] = {}
        self._size = 0
        seen: set[str] = set()
        for pattern, payload in patterns:
            if pattern in seen:
                raise ValueError(f"duplicate pattern {pattern!r}")
            seen.add(pattern)
            self._size += 1
            if " " in pattern:
                words = tuple(pattern.split())
                self._phrases.setdefault(words[0], []).append((words, pattern, payload))
            elif pattern.endswith("*"):
                self._stems.insert(pattern[:-1], pattern, payload)
            else:
                self._exact[pattern] = (pattern, payload)
        for group in self._phrases.values():
            group.sort(key=lambda item: len(item[0]), reverse=True)

    def __len__(self) -> int:
        return self._size

    def _phrase_at(self, tokens: Sequence[Token], i: int) -> Optional[Match]:
        word = tokens[i].normalized
        for words, pattern, payload in self._phrases.get(word, ()):
            n = len(words)
            if i + n > len(tokens):
                continue
            window = tokens[i : i + n]
            if all(t.kind is TokenKind.WORD for t in window) and all(
                t.normalized == w for t, w in zip(window, words)
            ):
                return Match(pattern, payload, window[0].start, window[-1].end, i, n)
        return None

    def match_all(self, tokens: Sequence[Token]) -> list[Match]:
        """Every match in text order with overlaps already resolved."""
        matches: list[Match] = []
        i = 0
        n = len(tokens)
        while i < n:
            token = tokens[i]
            if token.kind is not TokenKind.WORD:
                i += 1
                continue
            match = self._phrase_at(tokens, i)
            if match is None:
                word = token.normalized
                hit = self._exact.get(word) or self._stems.longest(word)
                if hit is not None:
                    match = Match(hit[0], hit[1], token.start, token.end, i, 1)
            if match is None:
                i += 1
            else:
                matches.append(match)
                i += match.token_count
        return matches


def compile_matcher(entries: Iterable[tuple[str, Any]]) -> CompiledMatcher:
    return CompiledMatcher(entries)
