"""End-to-end acceptance suite.

Each test implements one release criterion at its stated tolerance; the
terminal summary prints one PASS/FAIL line per criterion.  Oracles here
are independent re-derivations (enumeration, exact rationals, brute-force
set unions), never the code paths under test.
"""

from __future__ import annotations

import json
import os
import random
import statistics
import time
from datetime import datetime, timedelta, timezone
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from sentiscope.cli import main as cli_main
from sentiscope.corpus import load_labeled_corpus
from sentiscope.ensemble import Strategy, tradeoff_curve
from sentiscope.errors import LexiconInvariantError
from sentiscope.lexicons import (
    MoodLexicon,
    ScoreLexicon,
    ScoreMode,
    SynsetScores,
    ValenceLexicon,
    bundled_emoticon_lexicon,
    load_score_lexicon,
)
from sentiscope.methods import (
    BayesClassifier,
    ConceptClassifier,
    EmoticonClassifier,
    SynsetClassifier,
    ValenceClassifier,
    mood_timeseries,
    train,
)
from sentiscope.metrics import ConfusionCounts, agreement_matrix, coverage, metric_set
from sentiscope.service import create_app
from sentiscope.text import Message, tokenize
from sentiscope.verdicts import Polarity

from .support import fixture_corpus, oracle_bayes_posteriors, oracle_metrics

P, N = Polarity.POSITIVE, Polarity.NEGATIVE


def test_metrics_match_brute_force_oracle_exactly():
    started = time.perf_counter()
    for a in range(21):
        for b in range(21):
            for c in range(21):
                for d in range(21):
                    m = metric_set(ConfusionCounts(a, b, c, d))
                    expected = oracle_metrics(a, b, c, d)
                    assert (m.recall, m.precision, m.accuracy, m.fmeasure) == expected
    assert time.perf_counter() - started < 5.0


def test_concept_average_worked_example():
    lexicon = ScoreLexicon(
        mode=ScoreMode.CONCEPT, entries={"boring": -0.383, "monday morning": 0.228}
    )
    classifier = ConceptClassifier(lexicon)
    tokens = tokenize("Boring, it's Monday morning", bundled_emoticon_lexicon().entries.keys())
    verdict = classifier.classify(tokens)
    assert verdict.polarity is Polarity.NEGATIVE
    assert verdict.score == pytest.approx(-0.0775, abs=1e-12)
    assert abs(verdict.score - (-0.077)) <= 0.001


def test_synset_worked_example_and_sum_invariant(tmp_path):
    classifier = SynsetClassifier(
        ScoreLexicon(mode=ScoreMode.SYNSET, entries={"bad": SynsetScores(0.0, 0.850, 0.150)})
    )
    tokens = tokenize("bad", bundled_emoticon_lexicon().entries.keys())
    assert classifier.classify(tokens).polarity is Polarity.NEGATIVE

    violating = tmp_path / "synsets.tsv"
    violating.write_text("odd\t0.5\t0.6\t0.1\n", encoding="utf-8")
    with pytest.raises(LexiconInvariantError):
        load_score_lexicon(violating, ScoreMode.SYNSET)
    barely_off = tmp_path / "barely.tsv"
    barely_off.write_text("odd\t0.5\t0.5\t0.0001\n", encoding="utf-8")
    with pytest.raises(LexiconInvariantError):
        load_score_lexicon(barely_off, ScoreMode.SYNSET)
    within_tolerance = tmp_path / "within.tsv"
    within_tolerance.write_text("fine\t0.5\t0.5\t0.0000005\n", encoding="utf-8")
    assert "fine" in load_score_lexicon(within_tolerance, ScoreMode.SYNSET).entries


def test_every_published_emoticon_classifies_to_its_column():
    lexicon = bundled_emoticon_lexicon()
    classifier = EmoticonClassifier(lexicon)
    patterns = tuple(lexicon.entries)
    started = time.perf_counter()
    for symbol, polarity in lexicon.entries.items():
        tokens = tokenize(f"the forecast {symbol} for tomorrow", patterns)
        assert classifier.classify(tokens).polarity is polarity, symbol
    assert time.perf_counter() - started < 1.0


def test_happiness_boundary_split():
    classifier = ValenceClassifier(ValenceLexicon({"high": 8.0, "low": 2.0}))
    patterns = (":)",)
    boundary = classifier.classify(tokenize("high low", patterns))
    assert boundary.score == 5.0
    assert boundary.polarity is Polarity.POSITIVE

    just_below = ValenceClassifier(ValenceLexicon({"meh": 4.999}))
    verdict = just_below.classify(tokenize("meh", patterns))
    assert verdict.polarity is Polarity.NEGATIVE


def test_mood_score_reads_25_percent_above_baseline():
    lexicon = MoodLexicon({"amazed": "surprise"})
    day = timedelta(days=1)

    def bucket_messages(matching, total, day_of_month):
        return [
            Message(
                id=f"d{day_of_month}-{i}",
                text="amazed crowd" if i < matching else "plain words",
                timestamp=datetime(2009, 4, day_of_month, i, tzinfo=timezone.utc),
            )
            for i in range(total)
        ]

    # 5/16 = 0.3125 against baseline 0.25: exactly +0.250.
    series = mood_timeseries(bucket_messages(5, 16, 11), lexicon, {"surprise": 0.25}, day)
    assert series["surprise"][datetime(2009, 4, 11, tzinfo=timezone.utc)] == 0.250

    # 2/16 = 0.125 sits below the baseline: strictly negative.
    series = mood_timeseries(bucket_messages(2, 16, 12), lexicon, {"surprise": 0.25}, day)
    assert series["surprise"][datetime(2009, 4, 12, tzinfo=timezone.utc)] < 0.0

    # Saturated day: clamped into [-1, 1].
    series = mood_timeseries(bucket_messages(16, 16, 13), lexicon, {"surprise": 0.25}, day)
    values = [v for per_bucket in series.values() for v in per_bucket.values()]
    assert all(-1.0 <= value <= 1.0 for value in values)
    assert series["surprise"][datetime(2009, 4, 13, tzinfo=timezone.utc)] == 1.0


@pytest.fixture(scope="module")
def fixture_verdicts(engine):
    messages, labels = fixture_corpus()
    return engine.analyze_corpus(messages), labels


FIG_5B_STYLE_ORDER = [
    "emoticons",
    "strength",
    "valence",
    "concepts",
    "synsets",
    "moods",
    "bayes",
]


def test_union_coverage_identity_on_fixture(fixture_verdicts):
    table, labels = fixture_verdicts
    size = len(labels)
    for strategy in (Strategy.WEIGHTED_VOTE, Strategy.CASCADE):
        points = tradeoff_curve(table, labels, FIG_5B_STYLE_ORDER, strategy)
        previous = 0.0
        for prefix_size, point in enumerate(points, start=1):
            union: set[int] = set()
            for method in FIG_5B_STYLE_ORDER[:prefix_size]:
                union.update(i for i, v in enumerate(table[method]) if v.covered)
            assert point.coverage == len(union) / size
            assert point.coverage >= previous
            previous = point.coverage
    # The fixture genuinely seeds distinct per-method coverage.
    coverages = {m: coverage(v) for m, v in table.items()}
    assert all(0.0 < c < 1.0 for c in coverages.values())


def test_agreement_matrix_matches_brute_force_on_fixture(fixture_verdicts):
    table, _ = fixture_verdicts
    matrix = agreement_matrix(table)
    methods = matrix.methods
    for mi in methods:
        for mj in methods:
            both = same = 0
            for a, b in zip(table[mi], table[mj]):
                if a.covered and b.covered:
                    both += 1
                    same += int(a.polarity is b.polarity)
            cell = matrix.cell(mi, mj)
            assert (cell.both_covered, cell.same_polarity) == (both, same)
            assert matrix.cell(mj, mi) == cell
        if any(v.covered for v in table[mi]):
            assert matrix.cell(mi, mi).agreement == 1.0


def test_bayes_posteriors_match_enumeration_oracle():
    rng = random.Random(8080)
    patterns = (":)",)
    for _ in range(150):
        vocabulary = ["va", "vb", "vc", "vd", "ve", "vf"][: rng.randint(2, 6)]
        labels = [P, N] + [rng.choice([P, N, Polarity.NEUTRAL]) for _ in range(rng.randint(0, 8))]
        documents = [
            (rng.choices(vocabulary, k=rng.randint(1, 5)), label.value) for label in labels
        ]
        smoothing = rng.choice([0.5, 1.0, 1.5])
        classifier = BayesClassifier(
            train(
                [(" ".join(words), Polarity(label)) for words, label in documents],
                smoothing=smoothing,
            )
        )
        query = rng.choices(vocabulary + ["oov"], k=rng.randint(0, 6))
        expected = oracle_bayes_posteriors(documents, query, smoothing)
        got = classifier.posteriors(tokenize(" ".join(query), patterns))
        for cls, value in expected.items():
            assert got[cls] == pytest.approx(value, abs=1e-9)


def test_cli_and_api_verdicts_are_identical(tmp_path, capsys):
    messages, _ = fixture_corpus()
    texts = [m.text for m in messages[:50]]
    file_path = tmp_path / "texts.txt"
    file_path.write_text("\n".join(texts) + "\n", encoding="utf-8")

    assert cli_main(["analyze", "--file", str(file_path)]) == 0
    cli_records: dict[int, list[dict]] = {}
    for line in capsys.readouterr().out.splitlines():
        record = json.loads(line)
        index = record.pop("input_index")
        cli_records.setdefault(index, []).append(record)

    with TestClient(create_app()) as client:
        durations = []
        for index, text in enumerate(texts):
            started = time.perf_counter()
            response = client.post("/api/v1/analyze", json={"text": text})
            durations.append(time.perf_counter() - started)
            assert response.status_code == 200
            assert response.json()["verdicts"] == cli_records[index]
    assert statistics.median(durations) < 0.050


TABLE_3_COUNTS = {
    "twitter": 4242,
    "myspace": 1041,
    "youtube": 3407,
    "bbc": 1000,
    "runnersworld": 1046,
    "digg": 1077,
}


@pytest.mark.skipif(
    "SENTISCOPE_LABELED_DATA" not in os.environ,
    reason="set SENTISCOPE_LABELED_DATA to the directory of published corpora",
)
def test_published_corpus_counts_when_supplied():
    root = Path(os.environ["SENTISCOPE_LABELED_DATA"])
    for name, expected in TABLE_3_COUNTS.items():
        corpus = load_labeled_corpus(root / f"{name}.tsv", fmt="strength-pair", name=name)
        assert corpus.stats.messages + corpus.skipped_ties == expected, name
