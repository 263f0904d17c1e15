"""First-emoticon polarity: the leftmost known emoticon decides."""

from __future__ import annotations

from typing import Sequence

from ..lexicons import EmoticonLexicon
from ..text import Token, TokenKind
from ..verdicts import Polarity, Verdict

_SCORES = {Polarity.POSITIVE: 1.0, Polarity.NEGATIVE: -1.0, Polarity.NEUTRAL: 0.0}


class EmoticonClassifier:
    method_id = "emoticons"

    def __init__(self, lexicon: EmoticonLexicon) -> None:
        self._entries = lexicon.entries

    def classify(self, tokens: Sequence[Token]) -> Verdict:
        for token in tokens:
            if token.kind is TokenKind.EMOTICON:
                polarity = self._entries.get(token.surface)
                if polarity is not None:
                    return Verdict(self.method_id, polarity, _SCORES[polarity])
        return Verdict(self.method_id, Polarity.UNDETERMINED)
