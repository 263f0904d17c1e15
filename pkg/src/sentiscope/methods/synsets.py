"""Synset-score polarity: mean positive vs mean negative over matches.

Objective scores are ignored; every match occurrence counts, so a repeated
word weighs in as often as it appears.
"""

from __future__ import annotations

from typing import Sequence

from ..lexicons import ScoreLexicon, ScoreMode
from ..matching import compile_matcher
from ..text import Token
from ..verdicts import Polarity, Verdict


class SynsetClassifier:
    method_id = "synsets"

    def __init__(self, lexicon: ScoreLexicon) -> None:
        if lexicon.mode is not ScoreMode.SYNSET:
            raise ValueError("synset classifier needs a synset-mode score lexicon")
        self._matcher = compile_matcher(lexicon.entries.items())

    def classify(self, tokens: Sequence[Token]) -> Verdict:
        matches = self._matcher.match_all(tokens)
        if not matches:
            return Verdict(self.method_id, Polarity.UNDETERMINED)
        avg_pos = sum(m.payload.pos for m in matches) / len(matches)
        avg_neg = sum(m.payload.neg for m in matches) / len(matches)
        if avg_pos > avg_neg:
            polarity = Polarity.POSITIVE
        elif avg_neg > avg_pos:
            polarity = Polarity.NEGATIVE
        else:
            polarity = Polarity.NEUTRAL
        detail = {
            "avg_pos": avg_pos,
            "avg_neg": avg_neg,
            "matches": float(len(matches)),
        }
        return Verdict(self.method_id, polarity, avg_pos - avg_neg, detail)
