"""Shared test helpers: independent oracles and the seeded fixture corpus.

The oracles here deliberately re-derive results from first principles
(naive scans, Fraction arithmetic, brute-force enumeration) so the tests
never share a code path with the implementation they check.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Any, Optional, Sequence

from sentiscope.text import Message, Token, TokenKind
from sentiscope.verdicts import Polarity

P, N = Polarity.POSITIVE, Polarity.NEGATIVE

FIXTURE_SEED = 20130507
FIXTURE_SIZE = 200

# Cues chosen from the bundled demo lexicons so that each cue triggers
# (mostly) one method; overlap is harmless, exclusivity keeps coverage
# per method distinct.
METHOD_CUES = {
    "emoticons": {P: [":]", "=^)"], N: [":[", ">=("]},
    "categories": {P: ["agree"], N: ["cried", "fearful"]},
    "strength": {P: ["brilliant", "perfect"], N: ["ugly", "worst"]},
    "synsets": {P: ["graceful"], N: ["wicked", "lost"]},
    "concepts": {P: ["birthday party", "good news"], N: ["traffic jam", "lose job"]},
    "valence": {P: ["paradise", "music"], N: ["grief", "dust"]},
    "moods": {P: ["cheerful", "confident"], N: ["gloomy", "drowsy"]},
    "bayes": {P: ["thank", "won"], N: ["ruined", "keys"]},
}

INCLUSION_RATES = {
    "emoticons": 0.12,
    "categories": 0.30,
    "strength": 0.45,
    "synsets": 0.40,
    "concepts": 0.35,
    "valence": 0.40,
    "moods": 0.30,
    "bayes": 0.35,
}

NOISE_WORDS = [
    "the", "it", "onto", "whatever", "thing", "stuff",
    "later", "soon", "maybe", "item", "again", "around",
]


def fixture_corpus(
    size: int = FIXTURE_SIZE, seed: int = FIXTURE_SEED
) -> tuple[list[Message], list[Polarity]]:
    """A deterministic 200-message corpus with seeded per-method coverage."""
    rng = random.Random(seed)
    messages: list[Message] = []
    labels: list[Polarity] = []
    for i in range(size):
        label = P if rng.random() < 0.55 else N
        parts = [rng.choice(NOISE_WORDS) for _ in range(rng.randint(2, 5))]
        for method, rate in INCLUSION_RATES.items():
            if rng.random() < rate:
                cue_label = label if rng.random() >= 0.15 else (N if label is P else P)
                cue = rng.choice(METHOD_CUES[method][cue_label])
                parts.insert(rng.randrange(len(parts) + 1), cue)
        messages.append(Message(id=f"fixture:{i}", text=" ".join(parts), source="fixture"))
        labels.append(label)
    return messages, labels


def fixture_corpus_text(size: int = FIXTURE_SIZE, seed: int = FIXTURE_SEED) -> str:
    """The fixture corpus rendered in the two-column corpus format."""
    messages, labels = fixture_corpus(size, seed)
    return "\n".join(f"{l.value}\t{m.text}" for m, l in zip(messages, labels)) + "\n"


def naive_match_all(
    patterns: Sequence[tuple[str, Any]], tokens: Sequence[Token]
) -> list[tuple[int, int, str]]:
    """Per-pattern whole-token/prefix scan with the longest-first,
    leftmost-first tie rule; returns (token_index, token_count, pattern)."""
    candidates = []
    for pattern, _payload in patterns:
        if " " in pattern:
            words = pattern.split()
            n = len(words)
            for i in range(len(tokens) - n + 1):
                window = tokens[i : i + n]
                if all(t.kind is TokenKind.WORD for t in window) and [
                    t.normalized for t in window
                ] == words:
                    candidates.append((i, -n, 0, -len(pattern), pattern))
        elif pattern.endswith("*"):
            stem = pattern[:-1]
            for i, t in enumerate(tokens):
                if t.kind is TokenKind.WORD and t.normalized.startswith(stem):
                    candidates.append((i, -1, 2, -len(stem), pattern))
        else:
            for i, t in enumerate(tokens):
                if t.kind is TokenKind.WORD and t.normalized == pattern:
                    candidates.append((i, -1, 1, -len(pattern), pattern))
    candidates.sort()
    consumed: set[int] = set()
    chosen: list[tuple[int, int, str]] = []
    for i, neg_n, _priority, _, pattern in candidates:
        count = -neg_n
        if any(j in consumed for j in range(i, i + count)):
            continue
        consumed.update(range(i, i + count))
        chosen.append((i, count, pattern))
    chosen.sort()
    return chosen


def oracle_metrics(
    a: int, b: int, c: int, d: int
) -> tuple[Optional[float], Optional[float], Optional[float], Optional[float]]:
    """Recompute the metric set by enumerating message-level outcomes and
    taking the harmonic mean in exact rational arithmetic."""
    outcomes = [("P", "P")] * a + [("P", "N")] * b + [("N", "P")] * c + [("N", "N")] * d
    tp = outcomes.count(("P", "P"))
    fp = outcomes.count(("P", "N"))
    fn = outcomes.count(("N", "P"))
    tn = outcomes.count(("N", "N"))
    total = len(outcomes)
    recall = tp / (tp + fn) if tp + fn else None
    precision = tp / (tp + fp) if tp + fp else None
    accuracy = (tp + tn) / total if total else None
    if precision is None or recall is None or precision + recall == 0:
        fmeasure: Optional[float] = None
    else:
        pf, rf = Fraction(tp, tp + fp), Fraction(tp, tp + fn)
        fmeasure = float(2 * pf * rf / (pf + rf))
    return recall, precision, accuracy, fmeasure


def oracle_bayes_posteriors(
    documents: Sequence[tuple[Sequence[str], str]],
    words: Sequence[str],
    smoothing: float,
) -> dict[str, float]:
    """Hand-rolled smoothed Bayes posterior enumeration in exact rationals."""
    classes = []
    for _, label in documents:
        if label not in classes:
            classes.append(label)
    vocab = sorted({w for doc, _ in documents for w in doc})
    alpha = Fraction(smoothing)
    joint: dict[str, Fraction] = {}
    for c in classes:
        prior = Fraction(sum(1 for _, l in documents if l == c), len(documents))
        class_words = [w for doc, l in documents if l == c for w in doc]
        denominator = Fraction(len(class_words)) + alpha * len(vocab)
        value = prior
        for w in words:
            if w not in vocab:
                continue
            value *= (Fraction(class_words.count(w)) + alpha) / denominator
        joint[c] = value
    total = sum(joint.values())
    return {c: float(v / total) for c, v in joint.items()}
