from __future__ import annotations

from datetime import datetime, timedelta, timezone

import pytest

from sentiscope.errors import CorpusError, ZeroBaselineError
from sentiscope.lexicons import MoodLexicon
from sentiscope.methods import mood_baselines, mood_timeseries
from sentiscope.text import Message

LEXICON = MoodLexicon({"amazed": "surprise", "gloomy": "sadness"})
DAY = timedelta(days=1)


def msg(i, text, day=1, hour=0):
    stamp = datetime(2009, 6, day, hour, tzinfo=timezone.utc)
    return Message(id=f"m{i}", text=text, timestamp=stamp)


def bucket(day):
    return datetime(2009, 6, day, tzinfo=timezone.utc)


def test_baselines_are_message_fractions():
    messages = [msg(0, "amazed"), msg(1, "amazed gloomy"), msg(2, "nothing"), msg(3, "words")]
    baselines = mood_baselines(messages, LEXICON)
    assert baselines == {"surprise": 0.5, "sadness": 0.25}


def test_quarter_above_baseline_reads_exactly_point_25():
    # Baseline 0.25; one day where 5 of 16 messages mention the mood:
    # (0.3125 - 0.25) / 0.25 = 0.25, i.e. "up 25% versus a typical day".
    messages = [
        msg(i, "amazed today" if i < 5 else "plain words", day=2, hour=i)
        for i in range(16)
    ]
    series = mood_timeseries(messages, LEXICON, {"surprise": 0.25, "sadness": 0.25}, DAY)
    assert series["surprise"][bucket(2)] == 0.250


def test_below_baseline_is_negative():
    messages = [msg(i, "plain text", day=3, hour=i) for i in range(4)]
    series = mood_timeseries(messages, LEXICON, {"surprise": 0.5, "sadness": 0.5}, DAY)
    assert series["surprise"][bucket(3)] == -1.0
    assert series["sadness"][bucket(3)] < 0


def test_equal_to_baseline_is_zero():
    messages = [msg(0, "amazed", day=4), msg(1, "plain", day=4, hour=3)]
    series = mood_timeseries(messages, LEXICON, {"surprise": 0.5, "sadness": 0.5}, DAY)
    assert series["surprise"][bucket(4)] == 0.0


def test_large_rise_clamps_to_one():
    messages = [msg(i, "amazed", day=5, hour=i) for i in range(3)]
    series = mood_timeseries(messages, LEXICON, {"surprise": 0.25, "sadness": 0.25}, DAY)
    # Relative change (1.0 - 0.25) / 0.25 = 3.0, clamped.
    assert series["surprise"][bucket(5)] == 1.0
    assert all(-1.0 <= v <= 1.0 for per in series.values() for v in per.values())


def test_empty_buckets_are_omitted():
    messages = [msg(0, "amazed", day=1), msg(1, "amazed", day=9)]
    series = mood_timeseries(messages, LEXICON, {"surprise": 0.5, "sadness": 0.5}, DAY)
    assert set(series["surprise"]) == {bucket(1), bucket(9)}


def test_zero_baseline_names_the_mood():
    with pytest.raises(ZeroBaselineError) as excinfo:
        mood_timeseries([msg(0, "x")], LEXICON, {"surprise": 0.5, "sadness": 0.0}, DAY)
    assert excinfo.value.mood == "sadness"


def test_missing_timestamp_is_an_error():
    bare = Message(id="x", text="amazed")
    with pytest.raises(CorpusError):
        mood_timeseries([bare], LEXICON, {"surprise": 0.5, "sadness": 0.5}, DAY)


def test_nonpositive_bucket_rejected():
    with pytest.raises(ValueError):
        mood_timeseries([], LEXICON, {"surprise": 0.5, "sadness": 0.5}, timedelta(0))
