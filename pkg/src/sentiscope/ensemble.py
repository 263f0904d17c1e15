"""Rank-weighted combination of methods and the coverage/F tradeoff curve.

Weights are derived from calibration F-measures: the k-th ranked method of
M members gets weight M-k+1, ties sharing the lower weight.  Two
combination strategies ship because the combination rule itself is a free
choice: weighted voting (default) and a cascade that takes the first
covering verdict in descending weight order.  Either way the combination
covers a message exactly when at least one member does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

from .errors import EnsembleError
from .metrics import confusion, coverage, metric_set
from .verdicts import Polarity, Verdict

COMBINED_METHOD_ID = "combined"


class Strategy(str, Enum):
    WEIGHTED_VOTE = "weighted-vote"
    CASCADE = "cascade"


@dataclass(frozen=True)
class EnsembleConfig:
    members: tuple[str, ...]
    weights: Mapping[str, int]
    strategy: Strategy = Strategy.WEIGHTED_VOTE

    def __post_init__(self) -> None:
        if not self.members:
            raise EnsembleError("ensemble needs at least one member")
        if len(set(self.members)) != len(self.members):
            raise EnsembleError("duplicate ensemble members")
        ceiling = max(7, len(self.members))
        for member in self.members:
            weight = self.weights.get(member)
            if weight is None:
                raise EnsembleError(f"no weight for member {member!r}")
            if not isinstance(weight, int) or not 1 <= weight <= ceiling:
                raise EnsembleError(
                    f"weight for {member!r} must be an integer in [1, {ceiling}]"
                )

    def ranked_members(self) -> list[str]:
        order = {m: i for i, m in enumerate(self.members)}
        return sorted(self.members, key=lambda m: (-self.weights[m], order[m]))


@dataclass(frozen=True)
class TradeoffPoint:
    prefix_size: int
    members: tuple[str, ...]
    coverage: float
    fmeasure: Optional[float]


def calibrate_weights(fmeasures: Mapping[str, float]) -> dict[str, int]:
    """Integer weights M..1 by descending F-measure; ties share the lower one."""
    defined = {m: f for m, f in fmeasures.items() if f is not None}
    if len(defined) < 2:
        raise EnsembleError("calibration needs at least two methods with a defined F-measure")
    ranked = sorted(defined.items(), key=lambda item: -item[1])
    total = len(ranked)
    weights: dict[str, int] = {}
    i = 0
    while i < total:
        j = i
        while j + 1 < total and ranked[j + 1][1] == ranked[i][1]:
            j += 1
        for k in range(i, j + 1):
            weights[ranked[k][0]] = total - j
        i = j + 1
    return weights


def combined_classify(verdicts: Mapping[str, Verdict], cfg: EnsembleConfig) -> Verdict:
    missing = [m for m in cfg.members if m not in verdicts]
    if missing:
        raise EnsembleError(f"missing member verdicts: {missing}")
    covering = [m for m in cfg.ranked_members() if verdicts[m].covered]
    if not covering:
        return Verdict(COMBINED_METHOD_ID, Polarity.UNDETERMINED)
    if cfg.strategy is Strategy.CASCADE:
        leader = covering[0]
        polarity = verdicts[leader].polarity
        weight = cfg.weights[leader]
        score = float(weight if polarity is Polarity.POSITIVE else -weight)
        return Verdict(COMBINED_METHOD_ID, polarity, score, {"deciding_weight": float(weight)})
    pos = sum(cfg.weights[m] for m in covering if verdicts[m].polarity is Polarity.POSITIVE)
    neg = sum(cfg.weights[m] for m in covering if verdicts[m].polarity is Polarity.NEGATIVE)
    detail = {"positive_weight": float(pos), "negative_weight": float(neg)}
    if pos > neg:
        polarity = Polarity.POSITIVE
    elif neg > pos:
        polarity = Polarity.NEGATIVE
    else:
        # Tie: the strongest covering member decides.
        polarity = verdicts[covering[0]].polarity
        detail["tie_breaker_weight"] = float(cfg.weights[covering[0]])
    return Verdict(COMBINED_METHOD_ID, polarity, float(pos - neg), detail)


def combine_corpus(
    per_method_verdicts: Mapping[str, Sequence[Verdict]], cfg: EnsembleConfig
) -> list[Verdict]:
    lengths = {len(v) for v in per_method_verdicts.values()}
    if len(lengths) > 1:
        raise EnsembleError("per-method verdict lists are not aligned")
    count = lengths.pop() if lengths else 0
    return [
        combined_classify({m: per_method_verdicts[m][i] for m in cfg.members}, cfg)
        for i in range(count)
    ]


def tradeoff_curve(
    per_method_verdicts: Mapping[str, Sequence[Verdict]],
    labels: Sequence[Polarity],
    order: Sequence[str],
    strategy: Strategy = Strategy.WEIGHTED_VOTE,
) -> list[TradeoffPoint]:
    """Coverage and F-measure of each prefix ensemble of `order`.

    Prefix weights come from the members' own F-measures on this corpus;
    members with an undefined F rank at the bottom.  Coverage along the
    curve is the union coverage of the prefix, so it never decreases.
    """
    if not order:
        raise EnsembleError("tradeoff order must be non-empty")
    missing = [m for m in order if m not in per_method_verdicts]
    if missing:
        raise EnsembleError(f"no verdicts for methods: {missing}")
    fmeasures = {
        m: metric_set(confusion(per_method_verdicts[m], labels)).fmeasure for m in order
    }
    points: list[TradeoffPoint] = []
    for size in range(1, len(order) + 1):
        prefix = tuple(order[:size])
        if size == 1:
            weights = {prefix[0]: 1}
        else:
            ranked = {m: fmeasures[m] if fmeasures[m] is not None else -math.inf for m in prefix}
            weights = calibrate_weights(ranked)
        cfg = EnsembleConfig(members=prefix, weights=weights, strategy=strategy)
        combined = combine_corpus(per_method_verdicts, cfg)
        fmeasure = metric_set(confusion(combined, labels)).fmeasure
        points.append(
            TradeoffPoint(
                prefix_size=size,
                members=prefix,
                coverage=coverage(combined),
                fmeasure=fmeasure,
            )
        )
    return points


def load_ensemble_config(path: Union[str, Path]) -> EnsembleConfig:
    """Parse `strategy=...` plus `method<TAB>weight` lines."""
    path = Path(path)
    strategy = Strategy.WEIGHTED_VOTE
    members: list[str] = []
    weights: dict[str, int] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("strategy="):
                value = line.split("=", 1)[1].strip()
                try:
                    strategy = Strategy(value)
                except ValueError:
                    raise EnsembleError(f"{path}:{line_no}: unknown strategy {value!r}") from None
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise EnsembleError(f"{path}:{line_no}: expected 'method<TAB>weight'")
            method = fields[0].strip()
            try:
                weight = int(fields[1])
            except ValueError:
                raise EnsembleError(f"{path}:{line_no}: bad weight {fields[1]!r}") from None
            if method in weights:
                raise EnsembleError(f"{path}:{line_no}: duplicate member {method!r}")
            members.append(method)
            weights[method] = weight
    if not members:
        raise EnsembleError(f"{path}: no ensemble members")
    return EnsembleConfig(members=tuple(members), weights=weights, strategy=strategy)


def serialize_ensemble_config(cfg: EnsembleConfig) -> str:
    lines = [f"strategy={cfg.strategy.value}"]
    lines.extend(f"{m}\t{cfg.weights[m]}" for m in cfg.members)
    return "\n".join(lines) + "\n"
