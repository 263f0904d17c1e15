"""Evaluation machinery: confusion counts, the four prediction metrics,
coverage, pairwise agreement, and the polarity delta.

A metric whose denominator is zero is represented by None, never by 0,
so averages across datasets stay honest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .verdicts import Polarity, Verdict


@dataclass(frozen=True)
class ConfusionCounts:
    """The four cells: a/b = predicted positive on actual positive/negative,
    c/d = predicted negative on actual positive/negative."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        for name in "abcd":
            if getattr(self, name) < 0:
                raise ValueError(f"count {name} must be >= 0")

    @property
    def total(self) -> int:
        return self.a + self.b + self.c + self.d


@dataclass(frozen=True)
class MetricSet:
    recall: Optional[float]
    precision: Optional[float]
    accuracy: Optional[float]
    fmeasure: Optional[float]


@dataclass(frozen=True)
class AgreementCell:
    both_covered: int
    same_polarity: int

    @property
    def agreement(self) -> Optional[float]:
        if self.both_covered == 0:
            return None
        return self.same_polarity / self.both_covered


def confusion(
    verdicts: Sequence[Verdict], labels: Sequence[Polarity]
) -> ConfusionCounts:
    """Count the four cells; neutral/undetermined verdicts are coverage
    failures, not errors, and are excluded."""
    if len(verdicts) != len(labels):
        raise ValueError(
            f"verdicts ({len(verdicts)}) and labels ({len(labels)}) are not aligned"
        )
    a = b = c = d = 0
    for verdict, label in zip(verdicts, labels):
        if not label.covers:
            raise ValueError(f"ground-truth label must be positive or negative, got {label.value}")
        if verdict.polarity is Polarity.POSITIVE:
            if label is Polarity.POSITIVE:
                a += 1
            else:
                b += 1
        elif verdict.polarity is Polarity.NEGATIVE:
            if label is Polarity.POSITIVE:
                c += 1
            else:
                d += 1
    return ConfusionCounts(a, b, c, d)


def metric_set(cc: ConfusionCounts) -> MetricSet:
    recall = cc.a / (cc.a + cc.c) if cc.a + cc.c else None
    precision = cc.a / (cc.a + cc.b) if cc.a + cc.b else None
    accuracy = (cc.a + cc.d) / cc.total if cc.total else None
    # 2PR/(P+R) reduced over the counts; a single correctly rounded division
    # keeps the value exactly reproducible from the cells.
    if precision is None or recall is None or cc.a == 0:
        fmeasure = None
    else:
        fmeasure = 2 * cc.a / (2 * cc.a + cc.b + cc.c)
    return MetricSet(recall=recall, precision=precision, accuracy=accuracy, fmeasure=fmeasure)


def coverage(verdicts: Sequence[Verdict]) -> float:
    """Fraction of messages classified as either positive or negative."""
    if not verdicts:
        raise ValueError("cannot compute coverage of an empty verdict list")
    return sum(1 for v in verdicts if v.covered) / len(verdicts)


def uncovered_fraction(verdicts: Sequence[Verdict]) -> float:
    return 1.0 - coverage(verdicts)


@dataclass(frozen=True)
class AgreementMatrix:
    methods: tuple[str, ...]
    cells: Mapping[tuple[str, str], AgreementCell]

    def cell(self, row: str, col: str) -> AgreementCell:
        return self.cells[(row, col)]


def agreement_matrix(
    per_method_verdicts: Mapping[str, Sequence[Verdict]]
) -> AgreementMatrix:
    """Pairwise agreement over messages both methods covered (symmetric)."""
    methods = tuple(per_method_verdicts)
    lengths = {len(v) for v in per_method_verdicts.values()}
    if len(lengths) > 1:
        raise ValueError("verdict lists are not aligned to one message list")
    cells: dict[tuple[str, str], AgreementCell] = {}
    for i, mi in enumerate(methods):
        vi = per_method_verdicts[mi]
        for mj in methods[i:]:
            vj = per_method_verdicts[mj]
            both = same = 0
            for a, b in zip(vi, vj):
                if a.covered and b.covered:
                    both += 1
                    if a.polarity is b.polarity:
                        same += 1
            cell = AgreementCell(both_covered=both, same_polarity=same)
            cells[(mi, mj)] = cell
            cells[(mj, mi)] = cell
    return AgreementMatrix(methods=methods, cells=cells)


def polarity_delta(verdicts: Sequence[Verdict]) -> float:
    """Positive fraction minus negative fraction, in [-1, 1]."""
    if not verdicts:
        raise ValueError("cannot compute the polarity delta of an empty verdict list")
    pos = sum(1 for v in verdicts if v.polarity is Polarity.POSITIVE)
    neg = sum(1 for v in verdicts if v.polarity is Polarity.NEGATIVE)
    return (pos - neg) / len(verdicts)


def macro_average(metric_sets: Iterable[MetricSet]) -> MetricSet:
    """Plain mean across datasets, skipping undefined values per metric."""
    sets = list(metric_sets)

    def mean(values: list[float]) -> Optional[float]:
        return sum(values) / len(values) if values else None

    return MetricSet(
        recall=mean([m.recall for m in sets if m.recall is not None]),
        precision=mean([m.precision for m in sets if m.precision is not None]),
        accuracy=mean([m.accuracy for m in sets if m.accuracy is not None]),
        fmeasure=mean([m.fmeasure for m in sets if m.fmeasure is not None]),
    )
