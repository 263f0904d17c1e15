"""The analysis engine: loads lexicons from one directory and runs the
methods behind a single interface shared by the CLI and the HTTP service.

A method is "ready" when its lexicon (or trained model) file exists in the
lexicon directory; missing files leave the method listed but disabled.
Everything is loaded once and immutable afterwards, so one engine can
serve concurrent requests without locking.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

from . import lexicons, methods
from .ensemble import EnsembleConfig, Strategy, combined_classify, load_ensemble_config
from .errors import SentiscopeError, UnknownMethodError
from .text import Message, Token, tokenize
from .verdicts import Verdict

LEXICON_FILENAMES = {
    "emoticons": "emoticons.tsv",
    "categories": "categories.tsv",
    "strength": "strength.tsv",
    "synsets": "synsets.tsv",
    "concepts": "concepts.tsv",
    "valence": "valence.tsv",
    "moods": "moods.tsv",
    "bayes": "bayes.model",
}
ENSEMBLE_FILENAME = "ensemble.conf"


@dataclass(frozen=True)
class MethodInfo:
    id: str
    description: str
    ready: bool


class AnalysisEngine:
    def __init__(self, lexicon_dir: Union[str, Path, None] = None) -> None:
        self.lexicon_dir = Path(lexicon_dir) if lexicon_dir else lexicons.data_dir()
        if not self.lexicon_dir.is_dir():
            raise SentiscopeError(f"lexicon directory {self.lexicon_dir} does not exist")
        self._classifiers: dict[str, object] = {}
        emoticon_symbols: set[str] = set()

        path = self._path("emoticons")
        if path is not None:
            lexicon = lexicons.load_emoticon_lexicon(path)
            emoticon_symbols.update(lexicon.entries)
            self._classifiers["emoticons"] = methods.EmoticonClassifier(lexicon)
        path = self._path("categories")
        if path is not None:
            self._classifiers["categories"] = methods.CategoryClassifier(
                lexicons.load_category_lexicon(path)
            )
        path = self._path("strength")
        if path is not None:
            lexicon = lexicons.load_strength_lexicon(path)
            emoticon_symbols.update(lexicon.emoticon_strengths)
            self._classifiers["strength"] = methods.StrengthClassifier(lexicon)
        path = self._path("synsets")
        if path is not None:
            self._classifiers["synsets"] = methods.SynsetClassifier(
                lexicons.load_score_lexicon(path, lexicons.ScoreMode.SYNSET)
            )
        path = self._path("concepts")
        if path is not None:
            self._classifiers["concepts"] = methods.ConceptClassifier(
                lexicons.load_score_lexicon(path, lexicons.ScoreMode.CONCEPT)
            )
        path = self._path("valence")
        if path is not None:
            self._classifiers["valence"] = methods.ValenceClassifier(
                lexicons.load_valence_lexicon(path)
            )
        path = self._path("moods")
        if path is not None:
            self.mood_lexicon: Optional[lexicons.MoodLexicon] = lexicons.load_mood_lexicon(path)
            self._classifiers["moods"] = methods.MoodClassifier(self.mood_lexicon)
        else:
            self.mood_lexicon = None
        path = self._path("bayes")
        if path is not None:
            self._classifiers["bayes"] = methods.BayesClassifier(methods.load_model(path))

        if not self._classifiers:
            raise SentiscopeError(f"no lexicon files found in {self.lexicon_dir}")
        self._patterns = tuple(sorted(emoticon_symbols)) or lexicons.default_emoticon_patterns()

        ensemble_path = self.lexicon_dir / ENSEMBLE_FILENAME
        if not ensemble_path.is_file():
            ensemble_path = lexicons.data_dir() / ENSEMBLE_FILENAME
        self.default_ensemble = self._restrict(load_ensemble_config(ensemble_path))

    def _path(self, method: str) -> Optional[Path]:
        candidate = self.lexicon_dir / LEXICON_FILENAMES[method]
        return candidate if candidate.is_file() else None

    def _restrict(self, cfg: EnsembleConfig) -> Optional[EnsembleConfig]:
        """Drop config members whose lexicons are not loaded."""
        members = tuple(m for m in cfg.members if m in self._classifiers)
        if not members:
            return None
        return EnsembleConfig(
            members=members,
            weights={m: cfg.weights[m] for m in members},
            strategy=cfg.strategy,
        )

    @property
    def emoticon_patterns(self) -> tuple[str, ...]:
        return self._patterns

    def tokenize(self, text: str) -> list[Token]:
        return tokenize(text, self._patterns)

    def method_infos(self) -> list[MethodInfo]:
        return [
            MethodInfo(m, methods.METHOD_DESCRIPTIONS[m], m in self._classifiers)
            for m in methods.METHOD_IDS
        ]

    def ready_methods(self) -> list[str]:
        return [m for m in methods.METHOD_IDS if m in self._classifiers]

    def _resolve(self, requested: Optional[Sequence[str]]) -> list[str]:
        if requested is None:
            return self.ready_methods()
        resolved = []
        for method in requested:
            if method not in methods.METHOD_IDS:
                raise UnknownMethodError(method)
            if method not in self._classifiers:
                raise SentiscopeError(f"method {method!r} has no lexicon loaded")
            resolved.append(method)
        if not resolved:
            raise SentiscopeError("no methods requested")
        return resolved

    def analyze(self, text: str, selected: Optional[Sequence[str]] = None) -> list[Verdict]:
        """One verdict per method, in registry order."""
        chosen = self._resolve(selected)
        tokens = self.tokenize(text)
        return [self._classifiers[m].classify(tokens) for m in chosen]  # type: ignore[attr-defined]

    def analyze_corpus(
        self,
        messages: Sequence[Message],
        selected: Optional[Sequence[str]] = None,
    ) -> dict[str, list[Verdict]]:
        chosen = self._resolve(selected)
        token_lists = [self.tokenize(m.text) for m in messages]
        return {
            m: [self._classifiers[m].classify(tokens) for tokens in token_lists]  # type: ignore[attr-defined]
            for m in chosen
        }

    def ensemble_for(
        self,
        selected: Optional[Sequence[str]] = None,
        base: Optional[EnsembleConfig] = None,
        strategy: Optional[Strategy] = None,
    ) -> Optional[EnsembleConfig]:
        """The active ensemble, optionally restricted to `selected` members
        and with the strategy overridden.  Members outside the base config
        join with the lowest weight."""
        cfg = base if base is not None else self.default_ensemble
        if cfg is None:
            return None
        if selected is not None:
            members = tuple(m for m in selected)
            if not members:
                return None
            weights = {m: cfg.weights.get(m, 1) for m in members}
            cfg = EnsembleConfig(members=members, weights=weights, strategy=cfg.strategy)
        if strategy is not None and strategy is not cfg.strategy:
            cfg = EnsembleConfig(members=cfg.members, weights=cfg.weights, strategy=strategy)
        return cfg

    def combined(
        self,
        verdicts: Sequence[Verdict],
        cfg: Optional[EnsembleConfig] = None,
    ) -> Optional[Verdict]:
        """Combine per-method verdicts (any superset of the config members)."""
        cfg = cfg or self.default_ensemble
        if cfg is None:
            return None
        by_method: Mapping[str, Verdict] = {v.method: v for v in verdicts}
        usable = self._restrict(cfg)
        if usable is None:
            return None
        members = tuple(m for m in usable.members if m in by_method)
        if not members:
            return None
        cfg = EnsembleConfig(
            members=members,
            weights={m: usable.weights[m] for m in members},
            strategy=usable.strategy,
        )
        return combined_classify(by_method, cfg)
