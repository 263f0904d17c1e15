from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sentiscope.lexicons import bundled_emoticon_lexicon, default_emoticon_patterns
from sentiscope.text import TokenKind, ngrams, normalize, tokenize

PATTERNS = default_emoticon_patterns()


def kinds(tokens):
    return [(t.kind, t.surface) for t in tokens]


def test_empty_text_gives_no_tokens():
    assert tokenize("", PATTERNS) == []


def test_repeated_punctuation_stays_one_token():
    tokens = tokenize("Cool!!!!", PATTERNS)
    assert kinds(tokens) == [
        (TokenKind.WORD, "Cool"),
        (TokenKind.PUNCTUATION, "!!!!"),
    ]
    assert tokens[0].normalized == "cool"


def test_emoticon_survives_word_segmentation():
    tokens = tokenize("I'm sad :(", PATTERNS)
    assert kinds(tokens) == [
        (TokenKind.WORD, "I'm"),
        (TokenKind.WORD, "sad"),
        (TokenKind.EMOTICON, ":("),
    ]
    assert tokens[0].normalized == "i'm"


def test_emoticon_matched_longest_first():
    # ":o)" must win over the neutral ":o" prefix.
    (token,) = tokenize(":o)", PATTERNS)
    assert token.kind is TokenKind.EMOTICON and token.surface == ":o)"


def test_letter_emoticons_do_not_eat_words():
    tokens = tokenize("Oops Doom :Dear", PATTERNS)
    assert all(t.kind is not TokenKind.EMOTICON for t in tokens)
    assert [t.normalized for t in tokens if t.kind is TokenKind.WORD] == [
        "oops",
        "doom",
        "dear",
    ]


def test_urls_and_mentions_are_other():
    tokens = tokenize("see http://a.example/x and @sam www.example.org", PATTERNS)
    by_kind = {t.surface: t.kind for t in tokens}
    assert by_kind["http://a.example/x"] is TokenKind.OTHER
    assert by_kind["@sam"] is TokenKind.OTHER
    assert by_kind["www.example.org"] is TokenKind.OTHER


def test_alphanumeric_words_and_numbers():
    tokens = tokenize("flight a330 at 447", PATTERNS)
    lookup = {t.surface: t.kind for t in tokens}
    assert lookup["a330"] is TokenKind.WORD
    assert lookup["447"] is TokenKind.NUMBER


def test_pattern_preconditions_enforced():
    with pytest.raises(ValueError):
        tokenize("hello", [])
    with pytest.raises(ValueError):
        tokenize("hello", [":"])


def test_normalize_lowercases_words_only():
    (word,) = tokenize("LOVE", PATTERNS)
    assert normalize(word).normalized == "love"
    (emoticon,) = tokenize(":-)", PATTERNS)
    assert normalize(emoticon).surface == ":-)"
    assert normalize(emoticon) == emoticon
    (apostrophe,) = tokenize("Don't", PATTERNS)
    assert normalize(apostrophe).normalized == "don't"


def test_normalize_is_idempotent():
    for token in tokenize("Mixed CASE text :) !!!", PATTERNS):
        assert normalize(normalize(token)) == normalize(token)


def test_bigrams_of_plain_words():
    tokens = tokenize("monday morning", PATTERNS)
    assert ngrams(tokens, 2) == [("monday morning", (0, 14))]


def test_unigrams_are_the_word_tokens():
    tokens = tokenize("one two :) three", PATTERNS)
    words = [t for t in tokens if t.kind is TokenKind.WORD]
    assert ngrams(tokens, 1) == [(t.normalized, t.span) for t in words]


def test_emoticon_breaks_ngram_contiguity():
    assert ngrams(tokenize("sad :( day", PATTERNS), 2) == []


def test_ngrams_rejects_zero():
    with pytest.raises(ValueError):
        ngrams([], 0)


@pytest.mark.parametrize("symbol", sorted(bundled_emoticon_lexicon().entries))
def test_every_bundled_symbol_tokenizes_alone(symbol):
    tokens = tokenize(f"pad {symbol} pad", PATTERNS)
    emoticons = [t for t in tokens if t.kind is TokenKind.EMOTICON]
    assert [t.surface for t in emoticons] == [symbol]


@settings(max_examples=300, deadline=None)
@given(st.text(max_size=60))
def test_spans_partition_the_text(text):
    tokens = tokenize(text, PATTERNS)
    # Sorted, non-overlapping, and faithful to the source slice.
    previous_end = 0
    for token in tokens:
        assert token.start >= previous_end
        assert token.end > token.start
        assert text[token.start : token.end] == token.surface
        previous_end = token.end
    # Gaps between tokens hold only whitespace.
    rebuilt = []
    cursor = 0
    for token in tokens:
        gap = text[cursor : token.start]
        assert gap.strip() == ""
        rebuilt.append(gap)
        rebuilt.append(token.surface)
        cursor = token.end
    rebuilt.append(text[cursor:])
    assert "".join(rebuilt) == text


@settings(max_examples=100, deadline=None)
@given(st.text(max_size=60))
def test_tokenize_is_deterministic(text):
    assert tokenize(text, PATTERNS) == tokenize(text, PATTERNS)
