"""Category-count polarity: relative rate of positive vs negative affect."""

from __future__ import annotations

from typing import Sequence

from ..lexicons import Affect, CategoryLexicon
from ..matching import compile_matcher
from ..text import Token
from ..verdicts import Polarity, Verdict


class CategoryClassifier:
    method_id = "categories"

    def __init__(self, lexicon: CategoryLexicon) -> None:
        self._lexicon = lexicon
        self._matcher = compile_matcher(lexicon.entries)

    def classify(self, tokens: Sequence[Token]) -> Verdict:
        # A matched word counts once per affect side, no matter how many
        # same-affect categories list it.
        p = n = 0
        for match in self._matcher.match_all(tokens):
            affects = self._lexicon.affects_of(match.payload)
            if Affect.POSITIVE in affects:
                p += 1
            if Affect.NEGATIVE in affects:
                n += 1
        if p == n == 0:
            return Verdict(self.method_id, Polarity.UNDETERMINED)
        score = (p - n) / (p + n) if p + n else 0.0
        if p > n:
            polarity = Polarity.POSITIVE
        elif n > p:
            polarity = Polarity.NEGATIVE
        else:
            polarity = Polarity.NEUTRAL
        detail = {"positive_matches": float(p), "negative_matches": float(n)}
        return Verdict(self.method_id, polarity, score, detail)
