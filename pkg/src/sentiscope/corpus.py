"""Labeled-corpus ingestion and keyword-based event slicing.

Two corpus file formats are supported:

  - two-column:    `positive|negative<TAB>text`
  - strength-pair: `pos_strength<TAB>neg_strength<TAB>text`, strengths in
    1..5; the larger side is the label and equal-strength rows are skipped
    (the skip count is kept on the corpus).

Event slices keep messages whose tokens contain at least one keyword;
keywords match whole word/number tokens, `*` marks a prefix, and multiword
keywords must appear as adjacent lexical tokens in order.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .errors import CorpusError, CorpusFormatError, EmptyCorpusError
from .lexicons import default_emoticon_patterns
from .text import Message, Token, TokenKind, tokenize
from .verdicts import Polarity

Tokenizer = Callable[[str], Sequence[Token]]

_LEXICAL_KINDS = (TokenKind.WORD, TokenKind.NUMBER)


@dataclass(frozen=True)
class CorpusStats:
    messages: int
    positive_fraction: float
    negative_fraction: float


@dataclass(frozen=True)
class LabeledCorpus:
    name: str
    messages: tuple[Message, ...]
    labels: Mapping[str, Polarity]
    stats: CorpusStats
    skipped_ties: int = 0

    def label_list(self) -> list[Polarity]:
        return [self.labels[m.id] for m in self.messages]


def corpus_stats(labels: Iterable[Polarity]) -> CorpusStats:
    labels = list(labels)
    total = len(labels)
    if total == 0:
        raise EmptyCorpusError("empty corpus")
    pos = sum(1 for label in labels if label is Polarity.POSITIVE)
    return CorpusStats(
        messages=total,
        positive_fraction=pos / total,
        negative_fraction=(total - pos) / total,
    )


def _build_corpus(
    name: str, rows: list[tuple[str, Polarity]], skipped: int
) -> LabeledCorpus:
    if not rows:
        raise EmptyCorpusError(f"empty corpus {name!r}")
    messages = tuple(
        Message(id=f"{name}:{i}", text=text, source=name)
        for i, (text, _) in enumerate(rows, start=1)
    )
    labels = {m.id: label for m, (_, label) in zip(messages, rows)}
    return LabeledCorpus(
        name=name,
        messages=messages,
        labels=labels,
        stats=corpus_stats(labels.values()),
        skipped_ties=skipped,
    )


def load_labeled_corpus(
    path: Union[str, Path],
    fmt: str = "two-column",
    name: Optional[str] = None,
) -> LabeledCorpus:
    path = Path(path)
    name = name or path.stem
    rows: list[tuple[str, Polarity]] = []
    skipped = 0
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            if fmt == "two-column":
                fields = line.split("\t", 1)
                if len(fields) != 2:
                    raise CorpusFormatError(path, line_no, "expected 'label<TAB>text'")
                label_name = fields[0].strip().lower()
                if label_name not in ("positive", "negative"):
                    raise CorpusFormatError(path, line_no, f"bad label {fields[0]!r}")
                rows.append((fields[1], Polarity(label_name)))
            elif fmt == "strength-pair":
                fields = line.split("\t", 2)
                if len(fields) != 3:
                    raise CorpusFormatError(
                        path, line_no, "expected 'pos_strength<TAB>neg_strength<TAB>text'"
                    )
                try:
                    pos, neg = int(fields[0]), int(fields[1])
                except ValueError:
                    raise CorpusFormatError(path, line_no, "strengths must be integers") from None
                if not (1 <= pos <= 5 and 1 <= neg <= 5):
                    raise CorpusFormatError(path, line_no, "strengths must lie in [1, 5]")
                if pos == neg:
                    skipped += 1
                    continue
                label = Polarity.POSITIVE if pos > neg else Polarity.NEGATIVE
                rows.append((fields[2], label))
            else:
                raise ValueError(f"unknown corpus format {fmt!r}")
    return _build_corpus(name, rows, skipped)


def serialize_labeled_corpus(corpus: LabeledCorpus) -> str:
    lines = [
        f"{corpus.labels[m.id].value}\t{m.text}" for m in corpus.messages
    ]
    return "\n".join(lines) + "\n"


def load_message_stream(path: Union[str, Path], source: Optional[str] = None) -> list[Message]:
    """Read `id<TAB>iso8601-timestamp<TAB>text` lines; '-' means no timestamp."""
    path = Path(path)
    messages: list[Message] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t", 2)
            if len(fields) != 3:
                raise CorpusFormatError(path, line_no, "expected 'id<TAB>timestamp<TAB>text'")
            msg_id = fields[0].strip()
            if not msg_id:
                raise CorpusFormatError(path, line_no, "empty message id")
            if msg_id in seen:
                raise CorpusFormatError(path, line_no, f"duplicate message id {msg_id!r}")
            seen.add(msg_id)
            timestamp: Optional[datetime] = None
            if fields[1].strip() not in ("", "-"):
                try:
                    timestamp = datetime.fromisoformat(fields[1].strip())
                except ValueError:
                    raise CorpusFormatError(path, line_no, f"bad timestamp {fields[1]!r}") from None
                if timestamp.tzinfo is None:
                    timestamp = timestamp.replace(tzinfo=timezone.utc)
            messages.append(Message(id=msg_id, text=fields[2], timestamp=timestamp, source=source))
    if not messages:
        raise EmptyCorpusError(f"empty message stream {path}")
    return messages


def serialize_message_stream(messages: Iterable[Message]) -> str:
    lines = []
    for m in messages:
        stamp = m.timestamp.isoformat() if m.timestamp is not None else "-"
        lines.append(f"{m.id}\t{stamp}\t{m.text}")
    return "\n".join(lines) + "\n"


def _utc(value: datetime) -> datetime:
    return value.replace(tzinfo=timezone.utc) if value.tzinfo is None else value


@dataclass(frozen=True)
class EventSpec:
    """A named topic: a UTC period and the keywords that select it."""

    name: str
    start: datetime
    end: datetime
    keywords: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "start", _utc(self.start))
        object.__setattr__(self, "end", _utc(self.end))
        if self.start > self.end:
            raise ValueError(f"event {self.name!r}: start is after end")
        if not self.keywords:
            raise ValueError(f"event {self.name!r}: needs at least one keyword")
        object.__setattr__(
            self, "keywords", tuple(k.strip().casefold() for k in self.keywords)
        )


def _compile_keywords(
    keywords: Sequence[str], tokenizer: Tokenizer
) -> list[tuple[tuple[str, ...], bool]]:
    compiled = []
    for keyword in keywords:
        prefix = keyword.endswith("*")
        base = keyword[:-1] if prefix else keyword
        words = tuple(
            t.normalized for t in tokenizer(base) if t.kind in _LEXICAL_KINDS
        )
        if not words:
            raise ValueError(f"keyword {keyword!r} contains no lexical tokens")
        compiled.append((words, prefix))
    return compiled


def _keyword_hit(sequence: list[str], words: tuple[str, ...], prefix: bool) -> bool:
    n = len(words)
    for i in range(len(sequence) - n + 1):
        window = sequence[i : i + n]
        if window[: n - 1] != list(words[: n - 1]):
            continue
        last = window[n - 1]
        if last == words[n - 1] or (prefix and last.startswith(words[n - 1])):
            return True
    return False


def filter_event(
    messages: Iterable[Message],
    spec: EventSpec,
    tokenizer: Optional[Tokenizer] = None,
) -> list[Message]:
    """Messages inside the event period whose tokens contain a keyword.

    Keyword matching runs over word and number tokens only, ignoring
    intervening punctuation, so "half-blood prince" still matches the
    hyphenated spelling.
    """
    tok = tokenizer or (lambda text: tokenize(text, default_emoticon_patterns()))
    compiled = _compile_keywords(spec.keywords, tok)
    kept: list[Message] = []
    for message in messages:
        if message.timestamp is None:
            raise CorpusError(f"message {message.id!r} has no timestamp")
        ts = _utc(message.timestamp)
        if not spec.start <= ts <= spec.end:
            continue
        sequence = [
            t.normalized for t in tok(message.text) if t.kind in _LEXICAL_KINDS
        ]
        if any(_keyword_hit(sequence, words, prefix) for words, prefix in compiled):
            kept.append(message)
    return kept


def _event(name: str, start: str, end: str, keywords: str) -> EventSpec:
    return EventSpec(
        name=name,
        start=datetime.fromisoformat(start),
        end=datetime.fromisoformat(end),
        keywords=tuple(k.strip() for k in keywords.split(",")),
    )


# The six bundled topic slices (period endpoints are inclusive days).
BUILTIN_EVENTS: tuple[EventSpec, ...] = (
    _event(
        "airfrance",
        "2009-06-01T00:00:00",
        "2009-06-06T23:59:59",
        "victims, passengers, a330, 447, crash, airplane, airfrance",
    ),
    _event(
        "us-elections-2008",
        "2008-11-02T00:00:00",
        "2008-11-06T23:59:59",
        "voting, vote, candidate, campaign, mccain, democrat*, republican*, obama, bush",
    ),
    _event(
        "olympics-2008",
        "2008-08-06T00:00:00",
        "2008-08-26T23:59:59",
        "olympics, medal*, china, beijing, sports, peking, sponsor",
    ),
    _event(
        "susan-boyle",
        "2009-04-11T00:00:00",
        "2009-04-16T23:59:59",
        "susan boyle, i dreamed a dream, britain's got talent, les miserables",
    ),
    _event(
        "h1n1",
        "2009-06-09T00:00:00",
        "2009-06-26T23:59:59",
        "outbreak, virus, influenza, pandemi*, h1n1, swine, world health organization",
    ),
    _event(
        "harry-potter",
        "2009-07-13T00:00:00",
        "2009-07-17T23:59:59",
        "harry potter, half-blood prince, rowling",
    ),
)
