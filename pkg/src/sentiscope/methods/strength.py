"""Rule-based graded polarity with boosters, negation and punctuation.

Both sides carry a strength on the 1..5 scale with 1 as the baseline.
Each matched term contributes clamp(|base| + booster offsets + punctuation
bonus, 1, 5) to its side; a negator within the two preceding word tokens
flips the term's side.  Signed emoticons contribute a fixed strength of 2
(their +-1 value sits on top of the baseline).  The stronger side wins.
"""

from __future__ import annotations

from typing import Sequence

from ..lexicons import StrengthLexicon
from ..matching import compile_matcher
from ..text import Token, TokenKind
from ..verdicts import Polarity, Verdict

_NEGATION_WINDOW = 2
_BOOSTER_WINDOW = 2
_PUNCT_RUN_MIN = 3
_PUNCT_WINDOW = 2
_EMOTICON_STRENGTH = 2


def _clamp(value: int) -> int:
    return max(1, min(5, value))


class StrengthClassifier:
    method_id = "strength"

    def __init__(self, lexicon: StrengthLexicon) -> None:
        self._lexicon = lexicon
        self._matcher = compile_matcher(lexicon.term_strengths.items())

    def classify(self, tokens: Sequence[Token]) -> Verdict:
        lex = self._lexicon
        term_matches = self._matcher.match_all(tokens)
        word_positions = [i for i, t in enumerate(tokens) if t.kind is TokenKind.WORD]
        word_rank = {pos: rank for rank, pos in enumerate(word_positions)}

        # Punctuation bonus: a run of >= 3 identical marks strengthens the
        # nearest term that precedes it within two token positions.
        bonus: dict[int, int] = {}
        term_by_position = {m.token_index + m.token_count - 1: m for m in term_matches}
        for i, token in enumerate(tokens):
            if token.kind is not TokenKind.PUNCTUATION or len(token.surface) < _PUNCT_RUN_MIN:
                continue
            for back in range(1, _PUNCT_WINDOW + 1):
                position = i - back
                if position in term_by_position:
                    bonus[position] = bonus.get(position, 0) + 1
                    break

        contributions: list[tuple[int, int]] = []  # (sign, magnitude)
        for match in term_matches:
            base = match.payload
            sign = 1 if base > 0 else -1
            magnitude = abs(base)
            rank = word_rank[match.token_index]
            window = [
                tokens[word_positions[r]].normalized
                for r in range(max(0, rank - _BOOSTER_WINDOW), rank)
            ]
            magnitude += sum(lex.boosters.get(w, 0) for w in window)
            if any(w in lex.negators for w in window[-_NEGATION_WINDOW:]):
                sign = -sign
            magnitude += bonus.get(match.token_index + match.token_count - 1, 0)
            contributions.append((sign, _clamp(magnitude)))

        for token in tokens:
            if token.kind is TokenKind.EMOTICON:
                value = lex.emoticon_strengths.get(token.surface)
                if value is not None:
                    contributions.append((value, _EMOTICON_STRENGTH))

        pos_strength = max([1] + [m for s, m in contributions if s > 0])
        neg_strength = max([1] + [m for s, m in contributions if s < 0])
        if not contributions:
            return Verdict(self.method_id, Polarity.UNDETERMINED)
        if pos_strength > neg_strength:
            polarity = Polarity.POSITIVE
        elif neg_strength > pos_strength:
            polarity = Polarity.NEGATIVE
        else:
            polarity = Polarity.NEUTRAL
        detail = {"pos_strength": float(pos_strength), "neg_strength": float(neg_strength)}
        return Verdict(self.method_id, polarity, float(pos_strength - neg_strength), detail)
