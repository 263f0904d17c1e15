"""The common verdict contract every analysis method returns."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional


class Polarity(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    UNDETERMINED = "undetermined"

    @property
    def covers(self) -> bool:
        """True when the text was classified as either positive or negative."""
        return self in (Polarity.POSITIVE, Polarity.NEGATIVE)


@dataclass(frozen=True)
class Verdict:
    """One method's judgment of one message.

    `score` is on the method's own scale; its sign agrees with the polarity
    for signed scales.  `detail` carries named sub-scores (e.g. the positive
    and negative strengths of the rule-based method) so that ties remain
    explainable.
    """

    method: str
    polarity: Polarity
    score: float = 0.0
    detail: Optional[Mapping[str, float]] = None

    @property
    def covered(self) -> bool:
        return self.polarity.covers

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "polarity": self.polarity.value,
            "score": self.score,
            "detail": dict(self.detail) if self.detail is not None else None,
        }
