"""Concept-score polarity: arithmetic mean over matched concept phrases."""

from __future__ import annotations

from typing import Sequence

from ..lexicons import ScoreLexicon, ScoreMode
from ..matching import compile_matcher
from ..text import Token
from ..verdicts import Polarity, Verdict


class ConceptClassifier:
    method_id = "concepts"

    def __init__(self, lexicon: ScoreLexicon) -> None:
        if lexicon.mode is not ScoreMode.CONCEPT:
            raise ValueError("concept classifier needs a concept-mode score lexicon")
        self._matcher = compile_matcher(lexicon.entries.items())

    def classify(self, tokens: Sequence[Token]) -> Verdict:
        matches = self._matcher.match_all(tokens)
        if not matches:
            return Verdict(self.method_id, Polarity.UNDETERMINED)
        score = sum(m.payload for m in matches) / len(matches)
        if score > 0:
            polarity = Polarity.POSITIVE
        elif score < 0:
            polarity = Polarity.NEGATIVE
        else:
            polarity = Polarity.NEUTRAL
        return Verdict(self.method_id, polarity, score, {"matches": float(len(matches))})
