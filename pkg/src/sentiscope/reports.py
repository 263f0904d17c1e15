"""CSV and Markdown renderings of the evaluation tables.

Every report is derived from the same in-memory values: CSV keeps full
float reprs for machines, Markdown rounds to three decimals for humans.
Undefined metrics render as an em-dash placeholder, never as 0.
"""

from __future__ import annotations

import csv
import io
from typing import Mapping, Optional, Sequence

from .ensemble import TradeoffPoint
from .metrics import AgreementMatrix, MetricSet

UNDEFINED = "—"

_METRIC_ROWS = (
    ("Recall", "recall"),
    ("Precision", "precision"),
    ("Accuracy", "accuracy"),
    ("F-measure", "fmeasure"),
)


def _csv(rows: Sequence[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _markdown(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    lines = [
        "| " + " | ".join(header) + " |",
        "| " + " | ".join("---" for _ in header) + " |",
    ]
    lines.extend("| " + " | ".join(row) + " |" for row in rows)
    return "\n".join(lines) + "\n"


def _machine(value: Optional[float]) -> str:
    return UNDEFINED if value is None else repr(value)


def _human(value: Optional[float]) -> str:
    return UNDEFINED if value is None else f"{value:.3f}"


def metric_table_csv(per_method: Mapping[str, MetricSet]) -> str:
    methods = list(per_method)
    rows: list[list[object]] = [["metric"] + methods]
    for title, attr in _METRIC_ROWS:
        rows.append([title] + [_machine(getattr(per_method[m], attr)) for m in methods])
    return _csv(rows)


def metric_table_markdown(per_method: Mapping[str, MetricSet]) -> str:
    methods = list(per_method)
    rows = [
        [title] + [_human(getattr(per_method[m], attr)) for m in methods]
        for title, attr in _METRIC_ROWS
    ]
    return _markdown(["Metric"] + methods, rows)


def fmeasure_table_csv(per_dataset: Mapping[str, Mapping[str, Optional[float]]]) -> str:
    datasets = list(per_dataset)
    methods: list[str] = list(next(iter(per_dataset.values()), {}))
    rows: list[list[object]] = [["method"] + datasets]
    for m in methods:
        rows.append([m] + [_machine(per_dataset[d].get(m)) for d in datasets])
    return _csv(rows)


def fmeasure_table_markdown(per_dataset: Mapping[str, Mapping[str, Optional[float]]]) -> str:
    datasets = list(per_dataset)
    methods: list[str] = list(next(iter(per_dataset.values()), {}))
    rows = [[m] + [_human(per_dataset[d].get(m)) for d in datasets] for m in methods]
    return _markdown(["Method"] + datasets, rows)


def _agreement_rows(matrix: AgreementMatrix, fmt) -> list[list[str]]:
    rows = []
    for mi in matrix.methods:
        row = [mi]
        values = []
        for mj in matrix.methods:
            value = matrix.cell(mi, mj).agreement
            if mi != mj and value is not None:
                values.append(value)
            row.append(fmt(value))
        row.append(fmt(sum(values) / len(values) if values else None))
        rows.append(row)
    return rows


def agreement_csv(matrix: AgreementMatrix) -> str:
    rows: list[list[object]] = [["method"] + list(matrix.methods) + ["average"]]
    rows.extend(_agreement_rows(matrix, _machine))
    return _csv(rows)


def agreement_markdown(matrix: AgreementMatrix) -> str:
    return _markdown(
        ["Method"] + list(matrix.methods) + ["Average"],
        _agreement_rows(matrix, _human),
    )


def coverage_csv(per_method: Mapping[str, float], union: Optional[float] = None) -> str:
    rows: list[list[object]] = [["method", "coverage", "uncovered"]]
    for method, value in per_method.items():
        rows.append([method, _machine(value), _machine(1.0 - value)])
    if union is not None:
        rows.append(["union", _machine(union), _machine(1.0 - union)])
    return _csv(rows)


def coverage_markdown(per_method: Mapping[str, float], union: Optional[float] = None) -> str:
    rows = [[m, _human(v), _human(1.0 - v)] for m, v in per_method.items()]
    if union is not None:
        rows.append(["union", _human(union), _human(1.0 - union)])
    return _markdown(["Method", "Coverage", "Uncovered"], rows)


def delta_csv(per_dataset: Mapping[str, Mapping[str, Optional[float]]]) -> str:
    datasets = list(per_dataset)
    methods: list[str] = list(next(iter(per_dataset.values()), {}))
    rows: list[list[object]] = [["dataset"] + methods]
    for d in datasets:
        rows.append([d] + [_machine(per_dataset[d].get(m)) for m in methods])
    return _csv(rows)


def delta_markdown(per_dataset: Mapping[str, Mapping[str, Optional[float]]]) -> str:
    datasets = list(per_dataset)
    methods: list[str] = list(next(iter(per_dataset.values()), {}))
    rows = [[d] + [_human(per_dataset[d].get(m)) for m in methods] for d in datasets]
    return _markdown(["Dataset"] + methods, rows)


def tradeoff_csv(points: Sequence[TradeoffPoint]) -> str:
    rows: list[list[object]] = [["prefix_size", "added_method", "coverage", "fmeasure"]]
    for point in points:
        rows.append(
            [
                point.prefix_size,
                point.members[-1],
                _machine(point.coverage),
                _machine(point.fmeasure),
            ]
        )
    return _csv(rows)


def tradeoff_markdown(points: Sequence[TradeoffPoint]) -> str:
    rows = [
        [str(p.prefix_size), p.members[-1], _human(p.coverage), _human(p.fmeasure)]
        for p in points
    ]
    return _markdown(["Prefix", "Added method", "Coverage", "F-measure"], rows)
