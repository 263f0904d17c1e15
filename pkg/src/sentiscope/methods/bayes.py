"""Trainable word-frequency classifier with an undecided margin.

A multinomial bag-of-words model with additive smoothing over the classes
positive / negative / neutral (neutral only when the training data has it).
When the top two log-posteriors sit closer than the margin, the classifier
abstains instead of guessing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from ..errors import MissingClassError, SentiscopeError
from ..lexicons import default_emoticon_patterns
from ..text import Token, TokenKind, tokenize
from ..verdicts import Polarity, Verdict

CLASS_ORDER = ("positive", "negative", "neutral")
_REQUIRED_CLASSES = ("positive", "negative")
_FORMAT_VERSION = 1

Tokenizer = Callable[[str], Sequence[Token]]


@dataclass(frozen=True)
class BayesModel:
    smoothing: float
    margin: float
    priors: Mapping[str, float]
    counts: Mapping[str, Mapping[str, int]]  # class -> word -> count

    @property
    def classes(self) -> tuple[str, ...]:
        return tuple(c for c in CLASS_ORDER if c in self.priors)


def _words(tokens: Sequence[Token]) -> list[str]:
    return [t.normalized for t in tokens if t.kind is TokenKind.WORD]


def train(
    examples: Iterable[tuple[str, Polarity]],
    smoothing: float = 1.0,
    margin: float = 0.0,
    tokenizer: Optional[Tokenizer] = None,
) -> BayesModel:
    """Fit the model on (text, label) pairs.

    Labels may be positive, negative or neutral; positive and negative are
    both required.  Smoothing must be > 0 so every class keeps nonzero
    probability mass; margin must be >= 0.
    """
    if smoothing <= 0:
        raise ValueError("smoothing must be positive")
    if margin < 0:
        raise ValueError("margin must be nonnegative")
    tok = tokenizer or (lambda text: tokenize(text, default_emoticon_patterns()))
    counts: dict[str, dict[str, int]] = {}
    docs: dict[str, int] = {}
    total_docs = 0
    for text, label in examples:
        if not label.covers and label is not Polarity.NEUTRAL:
            raise ValueError(f"cannot train on label {label.value!r}")
        name = label.value
        class_counts = counts.setdefault(name, {})
        for word in _words(tok(text)):
            class_counts[word] = class_counts.get(word, 0) + 1
        docs[name] = docs.get(name, 0) + 1
        total_docs += 1
    for required in _REQUIRED_CLASSES:
        if docs.get(required, 0) == 0:
            raise MissingClassError(required)
    priors = {c: docs[c] / total_docs for c in CLASS_ORDER if c in docs}
    return BayesModel(smoothing=smoothing, margin=margin, priors=priors, counts=counts)


class BayesClassifier:
    method_id = "bayes"

    def __init__(self, model: BayesModel) -> None:
        self._model = model
        self._classes = model.classes
        vocabulary: set[str] = set()
        for class_counts in model.counts.values():
            vocabulary.update(class_counts)
        self._vocabulary = vocabulary
        self._log_priors = {c: math.log(model.priors[c]) for c in self._classes}
        self._log_likelihood = {}
        v = len(vocabulary)
        for c in self._classes:
            class_counts = model.counts.get(c, {})
            denominator = sum(class_counts.values()) + model.smoothing * v
            self._log_likelihood[c] = {
                w: math.log((class_counts.get(w, 0) + model.smoothing) / denominator)
                for w in vocabulary
            }

    def posteriors(self, tokens: Sequence[Token]) -> dict[str, float]:
        """Normalized class posteriors; exp-sums to 1 by construction."""
        log_posts = self.log_posteriors(tokens)
        peak = max(log_posts.values())
        raw = {c: math.exp(lp - peak) for c, lp in log_posts.items()}
        total = sum(raw.values())
        return {c: value / total for c, value in raw.items()}

    def log_posteriors(self, tokens: Sequence[Token]) -> dict[str, float]:
        # Out-of-vocabulary words are dropped, so a text of entirely unseen
        # words falls back to the class priors.
        words = [w for w in _words(tokens) if w in self._vocabulary]
        scores = {}
        for c in self._classes:
            likelihood = self._log_likelihood[c]
            scores[c] = self._log_priors[c] + sum(likelihood[w] for w in words)
        return scores

    def classify(self, tokens: Sequence[Token]) -> Verdict:
        log_posts = self.log_posteriors(tokens)
        posts = self.posteriors(tokens)
        ranked = sorted(
            self._classes, key=lambda c: (-log_posts[c], CLASS_ORDER.index(c))
        )
        top = ranked[0]
        detail = {f"p_{c}": posts[c] for c in self._classes}
        score = posts.get("positive", 0.0) - posts.get("negative", 0.0)
        if len(ranked) > 1 and log_posts[top] - log_posts[ranked[1]] < self._model.margin:
            return Verdict(self.method_id, Polarity.UNDETERMINED, 0.0, detail)
        return Verdict(self.method_id, Polarity(top), score, detail)


def save_model(model: BayesModel, path: Union[str, Path]) -> None:
    lines = [f"version\t{_FORMAT_VERSION}"]
    lines.append(f"smoothing\t{model.smoothing!r}")
    lines.append(f"margin\t{model.margin!r}")
    for c in model.classes:
        lines.append(f"prior\t{c}\t{model.priors[c]!r}")
    for c in model.classes:
        for word in sorted(model.counts.get(c, {})):
            lines.append(f"{c}\t{word}\t{model.counts[c][word]}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_model(path: Union[str, Path]) -> BayesModel:
    path = Path(path)
    smoothing: Optional[float] = None
    margin: Optional[float] = None
    priors: dict[str, float] = {}
    counts: dict[str, dict[str, int]] = {}
    with open(path, encoding="utf-8") as handle:
        first = handle.readline().strip()
        if first != f"version\t{_FORMAT_VERSION}":
            raise SentiscopeError(f"{path}: unsupported model header {first!r}")
        for line_no, raw in enumerate(handle, start=2):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split("\t")
            try:
                if fields[0] == "smoothing" and len(fields) == 2:
                    smoothing = float(fields[1])
                elif fields[0] == "margin" and len(fields) == 2:
                    margin = float(fields[1])
                elif fields[0] == "prior" and len(fields) == 3:
                    priors[fields[1]] = float(fields[2])
                elif len(fields) == 3:
                    counts.setdefault(fields[0], {})[fields[1]] = int(fields[2])
                else:
                    raise ValueError("unrecognized line")
            except ValueError as exc:
                raise SentiscopeError(f"{path}:{line_no}: {exc}") from None
    if smoothing is None or margin is None or not priors:
        raise SentiscopeError(f"{path}: incomplete model header")
    for required in _REQUIRED_CLASSES:
        if required not in priors:
            raise SentiscopeError(f"{path}: model lacks class {required!r}")
    return BayesModel(smoothing=smoothing, margin=margin, priors=priors, counts=counts)
