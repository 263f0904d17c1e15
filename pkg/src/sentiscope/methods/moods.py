"""Mood word lists: per-message polarity and baseline-relative time series.

Eleven moods map to positive affect, negative affect, or neutral.  The
time-series score of a mood in a time bucket is the relative change of its
message fraction against a baseline fraction, clamped to [-1, 1]; the
paper-style reading of 0.25 is "up 25% versus a typical day".
"""

from __future__ import annotations

from datetime import datetime, timedelta, timezone
from typing import Callable, Mapping, Optional, Sequence

from ..errors import CorpusError, ZeroBaselineError
from ..lexicons import Affect, MOOD_AFFECT, MoodLexicon, default_emoticon_patterns
from ..matching import compile_matcher
from ..text import Message, Token, tokenize
from ..verdicts import Polarity, Verdict

Tokenizer = Callable[[str], Sequence[Token]]

_EPOCH = datetime(1970, 1, 1, tzinfo=timezone.utc)


def _default_tokenizer(text: str) -> Sequence[Token]:
    return tokenize(text, default_emoticon_patterns())


class MoodClassifier:
    method_id = "moods"

    def __init__(self, lexicon: MoodLexicon) -> None:
        self._matcher = compile_matcher(lexicon.entries.items())

    def mood_counts(self, tokens: Sequence[Token]) -> dict[str, int]:
        counts: dict[str, int] = {}
        for match in self._matcher.match_all(tokens):
            counts[match.payload] = counts.get(match.payload, 0) + 1
        return counts

    def classify(self, tokens: Sequence[Token]) -> Verdict:
        counts = self.mood_counts(tokens)
        if not counts:
            return Verdict(self.method_id, Polarity.UNDETERMINED)
        p = sum(c for mood, c in counts.items() if MOOD_AFFECT[mood] is Affect.POSITIVE)
        n = sum(c for mood, c in counts.items() if MOOD_AFFECT[mood] is Affect.NEGATIVE)
        if p > n:
            polarity = Polarity.POSITIVE
        elif n > p:
            polarity = Polarity.NEGATIVE
        else:
            polarity = Polarity.NEUTRAL  # ties, and neutral-mood-only texts
        score = (p - n) / (p + n) if p + n else 0.0
        detail = {"positive_matches": float(p), "negative_matches": float(n)}
        return Verdict(self.method_id, polarity, score, detail)


def _message_moods(
    messages: Sequence[Message], lexicon: MoodLexicon, tokenizer: Optional[Tokenizer]
) -> list[set[str]]:
    classifier = MoodClassifier(lexicon)
    tok = tokenizer or _default_tokenizer
    return [set(classifier.mood_counts(tok(m.text))) for m in messages]


def mood_baselines(
    messages: Sequence[Message],
    lexicon: MoodLexicon,
    tokenizer: Optional[Tokenizer] = None,
) -> dict[str, float]:
    """Fraction of reference messages containing each mood at least once."""
    if not messages:
        raise CorpusError("baseline corpus is empty")
    present = _message_moods(messages, lexicon, tokenizer)
    moods = sorted(set(lexicon.entries.values()))
    return {
        mood: sum(1 for p in present if mood in p) / len(messages) for mood in moods
    }


def mood_timeseries(
    messages: Sequence[Message],
    lexicon: MoodLexicon,
    baselines: Mapping[str, float],
    bucket: timedelta,
    tokenizer: Optional[Tokenizer] = None,
) -> dict[str, dict[datetime, float]]:
    """Per-mood, per-bucket relative change against the baseline.

    Returns {mood: {bucket_start: score}} with scores clamped to [-1, 1].
    Buckets holding no messages simply do not appear.
    """
    if bucket <= timedelta(0):
        raise ValueError("bucket must be a positive duration")
    moods = sorted(set(lexicon.entries.values()))
    for mood in moods:
        if baselines.get(mood, 0.0) <= 0.0:
            raise ZeroBaselineError(mood)

    buckets: dict[datetime, list[int]] = {}
    present = _message_moods(messages, lexicon, tokenizer)
    for index, message in enumerate(messages):
        if message.timestamp is None:
            raise CorpusError(f"message {message.id!r} has no timestamp")
        ts = message.timestamp
        if ts.tzinfo is None:
            ts = ts.replace(tzinfo=timezone.utc)
        slot = (ts - _EPOCH) // bucket
        start = _EPOCH + slot * bucket
        buckets.setdefault(start, []).append(index)

    series: dict[str, dict[datetime, float]] = {mood: {} for mood in moods}
    for start in sorted(buckets):
        indices = buckets[start]
        for mood in moods:
            fraction = sum(1 for i in indices if mood in present[i]) / len(indices)
            change = (fraction - baselines[mood]) / baselines[mood]
            series[mood][start] = max(-1.0, min(1.0, change))
    return series
