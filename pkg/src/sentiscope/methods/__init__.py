"""The eight polarity classifiers, each mapping tokens to one Verdict."""

from .bayes import BayesClassifier, BayesModel, load_model, save_model, train
from .categories import CategoryClassifier
from .concepts import ConceptClassifier
from .emoticons import EmoticonClassifier
from .moods import MoodClassifier, mood_baselines, mood_timeseries
from .strength import StrengthClassifier
from .synsets import SynsetClassifier
from .valence import ValenceClassifier

# Stable registry order; reports and the service keep this ordering.
METHOD_DESCRIPTIONS = {
    "emoticons": "Polarity of the first known emoticon in the text",
    "categories": "Word counts in positive- vs negative-affect categories",
    "strength": "Graded term strengths with boosters, negation and punctuation emphasis",
    "synsets": "Average positive vs negative synset scores of matched words",
    "concepts": "Mean polarity score of matched concept phrases",
    "valence": "Occurrence-weighted mean word pleasantness on the 1-9 scale",
    "moods": "Mood word counts mapped to positive or negative affect",
    "bayes": "Trained word-frequency classifier with an undecided margin",
}

METHOD_IDS = tuple(METHOD_DESCRIPTIONS)

__all__ = [
    "BayesClassifier",
    "BayesModel",
    "CategoryClassifier",
    "ConceptClassifier",
    "EmoticonClassifier",
    "METHOD_DESCRIPTIONS",
    "METHOD_IDS",
    "MoodClassifier",
    "StrengthClassifier",
    "SynsetClassifier",
    "ValenceClassifier",
    "load_model",
    "mood_baselines",
    "mood_timeseries",
    "save_model",
    "train",
]
