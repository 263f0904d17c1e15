"""Command-line entry points: analyze texts, benchmark methods on labeled
corpora, emit agreement/coverage reports, calibrate and apply the ensemble,
and start the HTTP service.

The CLI stays thin: every command wires files into the core package and
prints or writes what comes back.  Exit codes: 0 success, 1 input error,
2 internal error.
"""

from __future__ import annotations

import json
import sys
import traceback
from pathlib import Path
from typing import Optional, Sequence

import click

from . import reports
from .corpus import LabeledCorpus, load_labeled_corpus, load_message_stream
from .engine import AnalysisEngine
from .ensemble import (
    EnsembleConfig,
    Strategy,
    calibrate_weights,
    combine_corpus,
    load_ensemble_config,
    serialize_ensemble_config,
    tradeoff_curve,
)
from .errors import SentiscopeError
from .metrics import (
    agreement_matrix,
    confusion,
    coverage,
    macro_average,
    metric_set,
    polarity_delta,
)

LEXICON_DIR_ENVVAR = "SENTISCOPE_LEXICON_DIR"

_lexicon_dir_option = click.option(
    "--lexicon-dir",
    envvar=LEXICON_DIR_ENVVAR,
    type=click.Path(file_okay=False),
    default=None,
    help="Directory of lexicon files (defaults to the bundled set).",
)
_format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["two-column", "strength-pair"]),
    default="two-column",
    show_default=True,
    help="Labeled corpus file format.",
)


@click.group()
@click.version_option(package_name="sentiscope")
def cli() -> None:
    """Multi-method sentiment polarity analysis and comparison."""


def _split_methods(methods: Optional[str]) -> Optional[list[str]]:
    if methods is None:
        return None
    return [m.strip() for m in methods.split(",") if m.strip()]


def _write(out_dir: Path, name: str, content: str) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / name).write_text(content, encoding="utf-8")
    click.echo(f"wrote {out_dir / name}", err=True)


def _load_corpora(paths: Sequence[str], fmt: str) -> list[LabeledCorpus]:
    return [load_labeled_corpus(p, fmt=fmt) for p in paths]


@cli.command()
@click.option("--text", help="Analyze this text.")
@click.option("--file", "file_", type=click.Path(dir_okay=False), help="Analyze one text per line.")
@click.option("--methods", help="Comma-separated method ids (default: all ready).")
@_lexicon_dir_option
def analyze(text: Optional[str], file_: Optional[str], methods: Optional[str], lexicon_dir: Optional[str]) -> None:
    """Print one verdict per method as JSON lines."""
    if (text is None) == (file_ is None):
        raise click.UsageError("provide exactly one of --text or --file")
    engine = AnalysisEngine(lexicon_dir)
    if text is not None:
        texts = [text]
    else:
        texts = Path(file_).read_text(encoding="utf-8").splitlines()
    selected = _split_methods(methods)
    for index, line in enumerate(texts):
        for verdict in engine.analyze(line, selected):
            record = {"input_index": index, **verdict.to_dict()}
            click.echo(json.dumps(record, ensure_ascii=False))


@cli.command()
@click.option("--corpus", "corpora", multiple=True, required=True, type=click.Path(dir_okay=False))
@_format_option
@_lexicon_dir_option
@click.option("--out", required=True, type=click.Path(file_okay=False), help="Report directory.")
def benchmark(corpora: Sequence[str], fmt: str, lexicon_dir: Optional[str], out: str) -> None:
    """Evaluate every ready method on labeled corpora.

    Writes the per-dataset F-measure table, the macro-averaged metric
    table, and the polarity-delta series (with ground truth) as CSV and
    Markdown.
    """
    engine = AnalysisEngine(lexicon_dir)
    out_dir = Path(out)
    per_dataset_f: dict[str, dict[str, Optional[float]]] = {}
    per_method_sets: dict[str, list] = {m: [] for m in engine.ready_methods()}
    deltas: dict[str, dict[str, Optional[float]]] = {}
    for corpus in _load_corpora(corpora, fmt):
        labels = corpus.label_list()
        verdicts = engine.analyze_corpus(corpus.messages)
        per_dataset_f[corpus.name] = {}
        deltas[corpus.name] = {
            m: polarity_delta(v) for m, v in verdicts.items()
        }
        pos = corpus.stats.positive_fraction
        deltas[corpus.name]["ground_truth"] = pos - corpus.stats.negative_fraction
        for method, method_verdicts in verdicts.items():
            metrics = metric_set(confusion(method_verdicts, labels))
            per_dataset_f[corpus.name][method] = metrics.fmeasure
            per_method_sets[method].append(metrics)
    averaged = {m: macro_average(sets) for m, sets in per_method_sets.items()}
    _write(out_dir, "fmeasures.csv", reports.fmeasure_table_csv(per_dataset_f))
    _write(out_dir, "fmeasures.md", reports.fmeasure_table_markdown(per_dataset_f))
    _write(out_dir, "metrics.csv", reports.metric_table_csv(averaged))
    _write(out_dir, "metrics.md", reports.metric_table_markdown(averaged))
    _write(out_dir, "polarity_delta.csv", reports.delta_csv(deltas))
    _write(out_dir, "polarity_delta.md", reports.delta_markdown(deltas))


def _load_messages(corpus: Optional[str], messages: Optional[str], fmt: str):
    if (corpus is None) == (messages is None):
        raise click.UsageError("provide exactly one of --corpus or --messages")
    if corpus is not None:
        return load_labeled_corpus(corpus, fmt=fmt).messages
    return load_message_stream(messages)


@cli.command()
@click.option("--corpus", type=click.Path(dir_okay=False), help="Labeled corpus (labels unused).")
@click.option("--messages", type=click.Path(dir_okay=False), help="Message stream (id/timestamp/text).")
@_format_option
@_lexicon_dir_option
@click.option("--out", required=True, type=click.Path(file_okay=False))
def agreement(corpus: Optional[str], messages: Optional[str], fmt: str, lexicon_dir: Optional[str], out: str) -> None:
    """Write the pairwise agreement matrix for all ready methods."""
    engine = AnalysisEngine(lexicon_dir)
    msgs = _load_messages(corpus, messages, fmt)
    matrix = agreement_matrix(engine.analyze_corpus(msgs))
    out_dir = Path(out)
    _write(out_dir, "agreement.csv", reports.agreement_csv(matrix))
    _write(out_dir, "agreement.md", reports.agreement_markdown(matrix))


@cli.command("coverage")
@click.option("--corpus", type=click.Path(dir_okay=False), help="Labeled corpus (labels unused).")
@click.option("--messages", type=click.Path(dir_okay=False), help="Message stream (id/timestamp/text).")
@_format_option
@_lexicon_dir_option
@click.option("--out", required=True, type=click.Path(file_okay=False))
def coverage_command(corpus: Optional[str], messages: Optional[str], fmt: str, lexicon_dir: Optional[str], out: str) -> None:
    """Write per-method coverage, union coverage, and polarity deltas."""
    engine = AnalysisEngine(lexicon_dir)
    msgs = _load_messages(corpus, messages, fmt)
    verdicts = engine.analyze_corpus(msgs)
    per_method = {m: coverage(v) for m, v in verdicts.items()}
    covered: set[int] = set()
    for method_verdicts in verdicts.values():
        covered.update(i for i, v in enumerate(method_verdicts) if v.covered)
    union = len(covered) / len(msgs)
    deltas = {"all-messages": {m: polarity_delta(v) for m, v in verdicts.items()}}
    out_dir = Path(out)
    _write(out_dir, "coverage.csv", reports.coverage_csv(per_method, union))
    _write(out_dir, "coverage.md", reports.coverage_markdown(per_method, union))
    _write(out_dir, "polarity_delta.csv", reports.delta_csv(deltas))
    _write(out_dir, "polarity_delta.md", reports.delta_markdown(deltas))


@cli.command()
@click.option("--corpus", required=True, type=click.Path(dir_okay=False),
              help="Calibration corpus; never reuse the evaluation corpus.")
@_format_option
@_lexicon_dir_option
@click.option("--strategy", type=click.Choice([s.value for s in Strategy]),
              default=Strategy.WEIGHTED_VOTE.value, show_default=True)
@click.option("--include-categories", is_flag=True,
              help="Let the category method join the ensemble.")
@click.option("--out", required=True, type=click.Path(dir_okay=False), help="Config file to write.")
def calibrate(corpus: str, fmt: str, lexicon_dir: Optional[str], strategy: str,
              include_categories: bool, out: str) -> None:
    """Derive ranked ensemble weights from a labeled corpus."""
    engine = AnalysisEngine(lexicon_dir)
    loaded = load_labeled_corpus(corpus, fmt=fmt)
    members = [m for m in engine.ready_methods() if include_categories or m != "categories"]
    verdicts = engine.analyze_corpus(loaded.messages, members)
    labels = loaded.label_list()
    fmeasures = {
        m: metric_set(confusion(v, labels)).fmeasure for m, v in verdicts.items()
    }
    weights = calibrate_weights({m: f for m, f in fmeasures.items() if f is not None})
    ordered = tuple(sorted(weights, key=lambda m: -weights[m]))
    cfg = EnsembleConfig(members=ordered, weights=weights, strategy=Strategy(strategy))
    Path(out).write_text(serialize_ensemble_config(cfg), encoding="utf-8")
    click.echo(f"wrote {out}", err=True)


@cli.command()
@click.option("--config", "config_path", type=click.Path(dir_okay=False),
              help="Ensemble config (default: the engine's active ensemble).")
@click.option("--corpus", required=True, type=click.Path(dir_okay=False))
@_format_option
@_lexicon_dir_option
@click.option("--strategy", type=click.Choice([s.value for s in Strategy]), default=None,
              help="Override the config's combination strategy.")
@click.option("--out", required=True, type=click.Path(file_okay=False))
def combine(config_path: Optional[str], corpus: str, fmt: str, lexicon_dir: Optional[str],
            strategy: Optional[str], out: str) -> None:
    """Classify a corpus with the ensemble and emit the tradeoff curve."""
    engine = AnalysisEngine(lexicon_dir)
    base = load_ensemble_config(config_path) if config_path else engine.default_ensemble
    if base is None:
        raise SentiscopeError("no ensemble configuration available")
    cfg = engine.ensemble_for(base=base, strategy=Strategy(strategy) if strategy else None)
    assert cfg is not None
    loaded = load_labeled_corpus(corpus, fmt=fmt)
    labels = loaded.label_list()
    verdicts = engine.analyze_corpus(loaded.messages, cfg.members)
    combined = combine_corpus(verdicts, cfg)
    out_dir = Path(out)
    lines = []
    for message, verdict in zip(loaded.messages, combined):
        lines.append(json.dumps({"id": message.id, **verdict.to_dict()}, ensure_ascii=False))
    _write(out_dir, "combined.jsonl", "\n".join(lines) + "\n")
    points = tradeoff_curve(verdicts, labels, cfg.ranked_members(), cfg.strategy)
    _write(out_dir, "tradeoff.csv", reports.tradeoff_csv(points))
    _write(out_dir, "tradeoff.md", reports.tradeoff_markdown(points))


@cli.command()
@click.option("--config", "config_path", type=click.Path(dir_okay=False),
              help="Service configuration file (JSON).")
@click.option("--host", default=None, help="Override the configured listen address.")
@click.option("--port", type=int, default=None, help="Override the configured port.")
@_lexicon_dir_option
def serve(config_path: Optional[str], host: Optional[str], port: Optional[int],
          lexicon_dir: Optional[str]) -> None:
    """Start the HTTP JSON API (and the UI, when a bundle is built)."""
    import uvicorn

    from .service import ServiceConfig, create_app

    config = ServiceConfig.from_file(config_path) if config_path else ServiceConfig()
    if lexicon_dir is not None:
        config = config.model_copy(update={"lexicon_dir": lexicon_dir})
    app = create_app(config)
    uvicorn.run(app, host=host or config.host, port=port or config.port)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except click.ClickException as error:
        error.show()
        return 1
    except (SentiscopeError, OSError, ValueError) as error:
        click.echo(f"error: {error}", err=True)
        return 1
    except Exception:
        traceback.print_exc()
        return 2


if __name__ == "__main__":
    sys.exit(main())
