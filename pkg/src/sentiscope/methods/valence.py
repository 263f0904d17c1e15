"""Valence-average polarity on the 1-9 pleasantness scale.

The score is the occurrence-weighted mean valence of matched words;
[5, 9] reads positive, [1, 5) negative.  With no matched word the method
abstains instead of inventing a midpoint score.
"""

from __future__ import annotations

from typing import Sequence

from ..lexicons import ValenceLexicon
from ..matching import compile_matcher
from ..text import Token
from ..verdicts import Polarity, Verdict

POSITIVE_THRESHOLD = 5.0


class ValenceClassifier:
    method_id = "valence"

    def __init__(self, lexicon: ValenceLexicon) -> None:
        self._matcher = compile_matcher(lexicon.entries.items())

    def classify(self, tokens: Sequence[Token]) -> Verdict:
        matches = self._matcher.match_all(tokens)
        if not matches:
            return Verdict(self.method_id, Polarity.UNDETERMINED)
        score = sum(m.payload for m in matches) / len(matches)
        polarity = Polarity.POSITIVE if score >= POSITIVE_THRESHOLD else Polarity.NEGATIVE
        return Verdict(self.method_id, polarity, score, {"matches": float(len(matches))})
