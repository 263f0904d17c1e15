"""Lexicon shapes, their text formats, and the bundled dictionaries.

All files are UTF-8, tab-separated, one entry per line, with '#' comment
lines.  Patterns are case-folded at load time; a trailing '*' marks a stem
that matches any word starting with the prefix (category and strength-term
patterns only).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Optional, Union

from .errors import (
    EmptyLexiconError,
    LexiconFormatError,
    LexiconInvariantError,
)
from .verdicts import Polarity

_SYNSET_SUM_TOLERANCE = 1e-6


class Affect(str, Enum):
    POSITIVE = "positive-affect"
    NEGATIVE = "negative-affect"
    OTHER = "other"


class ScoreMode(str, Enum):
    SYNSET = "synset"
    CONCEPT = "concept"


MOODS = (
    "joviality",
    "assurance",
    "serenity",
    "surprise",
    "fear",
    "sadness",
    "guilt",
    "hostility",
    "shyness",
    "fatigue",
    "attentiveness",
)

# Fixed mapping from mood to affect; attentiveness stays neutral.
MOOD_AFFECT: Mapping[str, Affect] = {
    "joviality": Affect.POSITIVE,
    "assurance": Affect.POSITIVE,
    "serenity": Affect.POSITIVE,
    "surprise": Affect.POSITIVE,
    "fear": Affect.NEGATIVE,
    "sadness": Affect.NEGATIVE,
    "guilt": Affect.NEGATIVE,
    "hostility": Affect.NEGATIVE,
    "shyness": Affect.NEGATIVE,
    "fatigue": Affect.NEGATIVE,
    "attentiveness": Affect.OTHER,
}


@dataclass(frozen=True)
class EmoticonLexicon:
    entries: Mapping[str, Polarity]


@dataclass(frozen=True)
class Category:
    id: str
    name: str
    affect: Affect


@dataclass(frozen=True)
class CategoryLexicon:
    entries: tuple[tuple[str, frozenset[str]], ...]  # (pattern, category ids)
    categories: Mapping[str, Category]

    def affects_of(self, category_ids: Iterable[str]) -> set[Affect]:
        return {self.categories[cid].affect for cid in category_ids}


@dataclass(frozen=True)
class ValenceLexicon:
    entries: Mapping[str, float]


@dataclass(frozen=True)
class StrengthLexicon:
    term_strengths: Mapping[str, int]
    boosters: Mapping[str, int] = field(default_factory=dict)
    negators: frozenset[str] = frozenset()
    emoticon_strengths: Mapping[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class SynsetScores:
    pos: float
    neg: float
    obj: float


@dataclass(frozen=True)
class ScoreLexicon:
    """Key -> score map; synset mode holds pos/neg/obj triples, concept
    mode a single polarity score in [-1, 1].  Keys may be multiword."""

    mode: ScoreMode
    entries: Mapping[str, Union[SynsetScores, float]]


@dataclass(frozen=True)
class MoodLexicon:
    entries: Mapping[str, str]  # word -> mood name

    def words_of(self, mood: str) -> set[str]:
        return {w for w, m in self.entries.items() if m == mood}


Lexicon = Union[
    EmoticonLexicon,
    CategoryLexicon,
    ValenceLexicon,
    StrengthLexicon,
    ScoreLexicon,
    MoodLexicon,
]


def _lines(path: Path) -> Iterator[tuple[int, str]]:
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            yield line_no, line


def _check_pattern(path: Path, line_no: int, pattern: str, *, stems: bool, multiword: bool) -> str:
    pattern = pattern.strip().casefold()
    if not pattern:
        raise LexiconFormatError(path, line_no, "empty pattern")
    if "*" in pattern:
        if not stems:
            raise LexiconInvariantError(pattern, "'*' stems are not allowed in this lexicon")
        if not pattern.endswith("*") or pattern.count("*") > 1:
            raise LexiconInvariantError(pattern, "'*' is only allowed in final position")
        if len(pattern) < 2:
            raise LexiconInvariantError(pattern, "a stem needs at least one literal character")
    if " " in pattern:
        if not multiword:
            raise LexiconInvariantError(pattern, "multiword patterns are not allowed in this lexicon")
        pattern = " ".join(pattern.split())
    return pattern


def _put(entries: dict, key: str, value, *, what: str) -> None:
    if key in entries and entries[key] != value:
        raise LexiconInvariantError(key, f"conflicting {what} entries")
    entries[key] = value


def load_emoticon_lexicon(path: Union[str, Path]) -> EmoticonLexicon:
    path = Path(path)
    entries: dict[str, Polarity] = {}
    for line_no, line in _lines(path):
        fields = line.split("\t")
        if len(fields) != 2:
            raise LexiconFormatError(path, line_no, "expected 'symbol<TAB>polarity'")
        symbol, polarity_name = fields[0].strip(), fields[1].strip().lower()
        if len(symbol) < 2:
            raise LexiconInvariantError(symbol, "emoticon symbols need at least 2 characters")
        if polarity_name not in ("positive", "negative", "neutral"):
            raise LexiconFormatError(path, line_no, f"unknown polarity {polarity_name!r}")
        _put(entries, symbol, Polarity(polarity_name), what="polarity")
    if not entries:
        raise EmptyLexiconError(f"{path}: no emoticon entries")
    return EmoticonLexicon(entries=entries)


def load_category_lexicon(path: Union[str, Path]) -> CategoryLexicon:
    path = Path(path)
    categories: dict[str, Category] = {}
    entries: list[tuple[str, frozenset[str]]] = []
    seen: dict[str, frozenset[str]] = {}
    for line_no, line in _lines(path):
        if line.startswith("%cat\t"):
            fields = line.split("\t")
            if len(fields) != 4:
                raise LexiconFormatError(path, line_no, "expected '%cat<TAB>id<TAB>name<TAB>affect'")
            cid, name, affect_name = fields[1].strip(), fields[2].strip(), fields[3].strip()
            try:
                affect = Affect(affect_name)
            except ValueError:
                raise LexiconFormatError(path, line_no, f"unknown affect {affect_name!r}") from None
            if cid in categories:
                raise LexiconInvariantError(cid, "duplicate category id")
            categories[cid] = Category(cid, name, affect)
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise LexiconFormatError(path, line_no, "expected 'pattern<TAB>cat1,cat2,...'")
        pattern = _check_pattern(path, line_no, fields[0], stems=True, multiword=False)
        cat_ids = frozenset(c.strip() for c in fields[1].split(",") if c.strip())
        if not cat_ids:
            raise LexiconFormatError(path, line_no, "entry lists no categories")
        unknown = cat_ids - categories.keys()
        if unknown:
            raise LexiconInvariantError(pattern, f"unknown categories {sorted(unknown)}")
        _put(seen, pattern, cat_ids, what="category")
        entries.append((pattern, cat_ids))
    if not entries:
        raise EmptyLexiconError(f"{path}: no category entries")
    affects = {c.affect for c in categories.values()}
    if Affect.POSITIVE not in affects or Affect.NEGATIVE not in affects:
        raise LexiconInvariantError(
            str(path), "need at least one positive-affect and one negative-affect category"
        )
    return CategoryLexicon(entries=tuple(dict(entries).items()), categories=categories)


def load_valence_lexicon(path: Union[str, Path]) -> ValenceLexicon:
    path = Path(path)
    entries: dict[str, float] = {}
    for line_no, line in _lines(path):
        fields = line.split("\t")
        if len(fields) != 2:
            raise LexiconFormatError(path, line_no, "expected 'word<TAB>valence'")
        word = _check_pattern(path, line_no, fields[0], stems=False, multiword=False)
        try:
            valence = float(fields[1])
        except ValueError:
            raise LexiconFormatError(path, line_no, f"bad valence {fields[1]!r}") from None
        if not 1.0 <= valence <= 9.0:
            raise LexiconInvariantError(word, f"valence {valence} outside [1, 9]")
        _put(entries, word, valence, what="valence")
    if not entries:
        raise EmptyLexiconError(f"{path}: no valence entries")
    return ValenceLexicon(entries=entries)


def load_strength_lexicon(path: Union[str, Path]) -> StrengthLexicon:
    path = Path(path)
    sections = {"terms": [], "boosters": [], "negators": [], "emoticons": []}
    current: Optional[str] = None
    for line_no, line in _lines(path):
        stripped = line.strip()
        if stripped.startswith("[") and stripped.endswith("]"):
            name = stripped[1:-1].strip().lower()
            if name not in sections:
                raise LexiconFormatError(path, line_no, f"unknown section {name!r}")
            current = name
            continue
        if current is None:
            raise LexiconFormatError(path, line_no, "entry before any [section] header")
        sections[current].append((line_no, line))

    terms: dict[str, int] = {}
    for line_no, line in sections["terms"]:
        fields = line.split("\t")
        if len(fields) != 2:
            raise LexiconFormatError(path, line_no, "expected 'pattern<TAB>strength'")
        pattern = _check_pattern(path, line_no, fields[0], stems=True, multiword=False)
        try:
            strength = int(fields[1])
        except ValueError:
            raise LexiconFormatError(path, line_no, f"bad strength {fields[1]!r}") from None
        if strength == 0 or not -5 <= strength <= 5:
            raise LexiconInvariantError(pattern, f"strength {strength} outside [-5,-1] U [1,5]")
        _put(terms, pattern, strength, what="strength")
    boosters: dict[str, int] = {}
    for line_no, line in sections["boosters"]:
        fields = line.split("\t")
        if len(fields) != 2:
            raise LexiconFormatError(path, line_no, "expected 'word<TAB>offset'")
        word = _check_pattern(path, line_no, fields[0], stems=False, multiword=False)
        try:
            offset = int(fields[1])
        except ValueError:
            raise LexiconFormatError(path, line_no, f"bad offset {fields[1]!r}") from None
        if not -2 <= offset <= 2:
            raise LexiconInvariantError(word, f"booster offset {offset} outside [-2, 2]")
        _put(boosters, word, offset, what="booster")
    negators: set[str] = set()
    for line_no, line in sections["negators"]:
        negators.add(_check_pattern(path, line_no, line, stems=False, multiword=False))
    emoticons: dict[str, int] = {}
    for line_no, line in sections["emoticons"]:
        fields = line.split("\t")
        if len(fields) != 2:
            raise LexiconFormatError(path, line_no, "expected 'symbol<TAB>+1|-1'")
        symbol = fields[0].strip()
        if len(symbol) < 2:
            raise LexiconInvariantError(symbol, "emoticon symbols need at least 2 characters")
        try:
            value = int(fields[1])
        except ValueError:
            raise LexiconFormatError(path, line_no, f"bad emoticon strength {fields[1]!r}") from None
        if value not in (1, -1):
            raise LexiconInvariantError(symbol, "emoticon strength must be +1 or -1")
        _put(emoticons, symbol, value, what="emoticon strength")
    if not terms:
        raise EmptyLexiconError(f"{path}: no [terms] entries")
    return StrengthLexicon(
        term_strengths=terms,
        boosters=boosters,
        negators=frozenset(negators),
        emoticon_strengths=emoticons,
    )


def load_score_lexicon(path: Union[str, Path], mode: ScoreMode) -> ScoreLexicon:
    path = Path(path)
    mode = ScoreMode(mode)
    entries: dict[str, Union[SynsetScores, float]] = {}
    for line_no, line in _lines(path):
        fields = line.split("\t")
        if mode is ScoreMode.SYNSET:
            if len(fields) != 4:
                raise LexiconFormatError(path, line_no, "expected 'key<TAB>pos<TAB>neg<TAB>obj'")
            key = _check_pattern(path, line_no, fields[0], stems=False, multiword=True)
            try:
                pos, neg, obj = (float(f) for f in fields[1:])
            except ValueError:
                raise LexiconFormatError(path, line_no, "scores must be numbers") from None
            for score in (pos, neg, obj):
                if not 0.0 <= score <= 1.0:
                    raise LexiconInvariantError(key, f"score {score} outside [0, 1]")
            if abs(pos + neg + obj - 1.0) > _SYNSET_SUM_TOLERANCE:
                raise LexiconInvariantError(
                    key, f"pos+neg+obj = {pos + neg + obj!r}, expected 1 within {_SYNSET_SUM_TOLERANCE}"
                )
            _put(entries, key, SynsetScores(pos, neg, obj), what="synset")
        else:
            if len(fields) != 2:
                raise LexiconFormatError(path, line_no, "expected 'key<TAB>score'")
            key = _check_pattern(path, line_no, fields[0], stems=False, multiword=True)
            if len(key.split()) > 4:
                raise LexiconInvariantError(key, "concepts are limited to 4 words")
            try:
                score = float(fields[1])
            except ValueError:
                raise LexiconFormatError(path, line_no, f"bad score {fields[1]!r}") from None
            if not -1.0 <= score <= 1.0:
                raise LexiconInvariantError(key, f"score {score} outside [-1, 1]")
            _put(entries, key, score, what="concept")
    if not entries:
        raise EmptyLexiconError(f"{path}: no score entries")
    return ScoreLexicon(mode=mode, entries=entries)


def load_mood_lexicon(path: Union[str, Path]) -> MoodLexicon:
    path = Path(path)
    entries: dict[str, str] = {}
    for line_no, line in _lines(path):
        fields = line.split("\t")
        if len(fields) != 2:
            raise LexiconFormatError(path, line_no, "expected 'word<TAB>mood'")
        word = _check_pattern(path, line_no, fields[0], stems=False, multiword=False)
        mood = fields[1].strip().lower()
        if mood not in MOODS:
            raise LexiconFormatError(path, line_no, f"unknown mood {mood!r}")
        _put(entries, word, mood, what="mood")
    if not entries:
        raise EmptyLexiconError(f"{path}: no mood entries")
    return MoodLexicon(entries=entries)


_SHAPE_LOADERS = {
    "emoticon": load_emoticon_lexicon,
    "category": load_category_lexicon,
    "valence": load_valence_lexicon,
    "strength": load_strength_lexicon,
    "synset": lambda p: load_score_lexicon(p, ScoreMode.SYNSET),
    "concept": lambda p: load_score_lexicon(p, ScoreMode.CONCEPT),
    "mood": load_mood_lexicon,
}

SHAPES = tuple(_SHAPE_LOADERS)


def load_lexicon(path: Union[str, Path], shape: str) -> Lexicon:
    try:
        loader = _SHAPE_LOADERS[shape]
    except KeyError:
        raise ValueError(f"unknown lexicon shape {shape!r}; expected one of {SHAPES}") from None
    return loader(path)


def serialize_lexicon(lexicon: Lexicon) -> str:
    """Render a lexicon back into its text format (round-trips with load)."""
    lines: list[str] = []
    if isinstance(lexicon, EmoticonLexicon):
        for symbol, polarity in lexicon.entries.items():
            lines.append(f"{symbol}\t{polarity.value}")
    elif isinstance(lexicon, CategoryLexicon):
        for category in lexicon.categories.values():
            lines.append(f"%cat\t{category.id}\t{category.name}\t{category.affect.value}")
        for pattern, cat_ids in lexicon.entries:
            lines.append(f"{pattern}\t{','.join(sorted(cat_ids))}")
    elif isinstance(lexicon, ValenceLexicon):
        for word, valence in lexicon.entries.items():
            lines.append(f"{word}\t{valence!r}")
    elif isinstance(lexicon, StrengthLexicon):
        lines.append("[terms]")
        lines.extend(f"{p}\t{s}" for p, s in lexicon.term_strengths.items())
        lines.append("[boosters]")
        lines.extend(f"{w}\t{o}" for w, o in lexicon.boosters.items())
        lines.append("[negators]")
        lines.extend(sorted(lexicon.negators))
        lines.append("[emoticons]")
        lines.extend(f"{s}\t{v:+d}" for s, v in lexicon.emoticon_strengths.items())
    elif isinstance(lexicon, ScoreLexicon):
        for key, value in lexicon.entries.items():
            if lexicon.mode is ScoreMode.SYNSET:
                assert isinstance(value, SynsetScores)
                lines.append(f"{key}\t{value.pos!r}\t{value.neg!r}\t{value.obj!r}")
            else:
                lines.append(f"{key}\t{value!r}")
    elif isinstance(lexicon, MoodLexicon):
        for word, mood in lexicon.entries.items():
            lines.append(f"{word}\t{mood}")
    else:
        raise TypeError(f"not a lexicon: {type(lexicon)!r}")
    return "\n".join(lines) + "\n"


def data_dir() -> Path:
    """Directory holding the bundled lexicons and default config."""
    return Path(str(resources.files("sentiscope").joinpath("data")))


@functools.lru_cache(maxsize=None)
def bundled_emoticon_lexicon() -> EmoticonLexicon:
    return load_emoticon_lexicon(data_dir() / "emoticons.tsv")


@functools.lru_cache(maxsize=None)
def default_emoticon_patterns() -> tuple[str, ...]:
    """Tokenizer patterns from the bundled emoticon table."""
    return tuple(sorted(bundled_emoticon_lexicon().entries))
