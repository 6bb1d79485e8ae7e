"""Named experiments, one per cell of the result grid.

=========================  =====================  ======================
preset row                 result row             families
=========================  =====================  ======================
unigram                    unigrams (uni)         unigram
bigram                     bigrams                bigram
trigram                    trigrams               trigram
uni-bigram                 1, 2 grams             unigram, bigram
uni-bi-trigram             1, 2, 3 grams          unigram, bigram, trigram
word-pos                   uni+pos                word-pos
word-and-word-pos          uni+uni+pos            word-and-word-pos
lexicon-added              lexicon added          unigram, lexicon-words
adjectives                 adjectives             pos-only:adj
verbs                      verbs                  pos-only:verb
nouns                      nouns                  pos-only:noun
adj-verb-noun              adj+verb+noun          pos-only:adj|verb|noun
dependencies               dependencies           unigram, dep-pair
=========================  =====================  ======================

Each row combines with a classifier suffix ``-svm``, ``-nb`` or
``-maxent`` (``unigram-svm``, ``adjectives-nb``, ...). The lexicon rows are
``lexicon-no-weights``, ``lexicon-weights`` and
``lexicon-weights-negation``; the combo row is produced by the ``combo``
command from saved reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classifiers import CLASSIFIERS
from .errors import UsageError
from .features import DEFAULT_MAX_FEATURES, MAXENT_MAX_FEATURES, FeatureSpec
from .lexicon import ScoreConfig

ML_ROWS = {
    "unigram": ("unigrams (uni)", ("unigram",)),
    "bigram": ("bigrams", ("bigram",)),
    "trigram": ("trigrams", ("trigram",)),
    "uni-bigram": ("1, 2 grams", ("unigram", "bigram")),
    "uni-bi-trigram": ("1, 2, 3 grams", ("unigram", "bigram", "trigram")),
    "word-pos": ("uni+pos", ("word-pos",)),
    "word-and-word-pos": ("uni+uni+pos", ("word-and-word-pos",)),
    "lexicon-added": ("lexicon added", ("unigram", "lexicon-words")),
    "adjectives": ("adjectives", ("pos-only:adj",)),
    "verbs": ("verbs", ("pos-only:verb",)),
    "nouns": ("nouns", ("pos-only:noun",)),
    "adj-verb-noun": ("adj+verb+noun", ("pos-only:adj|verb|noun",)),
    "dependencies": ("dependencies", ("unigram", "dep-pair")),
}

LEXICON_ROWS = {
    "lexicon-no-weights": ("no weights", False, False),
    "lexicon-weights": ("with weights", True, False),
    "lexicon-weights-negation": ("weights + negation", True, True),
}

COMBO_ROW = '"Combo Classifier"'


@dataclass(frozen=True)
class Preset:
    name: str
    group: str  # "lexicon" or "learned"
    row: str
    families: tuple = ()
    classifier: Optional[str] = None
    weights: bool = False
    negation: bool = False

    @property
    def is_lexicon(self):
        return self.classifier is None

    def feature_spec(self, max_features: Optional[int] = None) -> FeatureSpec:
        if max_features is None:
            max_features = MAXENT_MAX_FEATURES if self.classifier == "maxent" else DEFAULT_MAX_FEATURES
        return FeatureSpec.parse(self.families, max_features)

    def score_config(self) -> ScoreConfig:
        return ScoreConfig.preset(self.weights, self.negation)


def _build():
    out = {}
    for name, (row, weights, negation) in LEXICON_ROWS.items():
        out[name] = Preset(name, "lexicon", row, weights=weights, negation=negation)
    for row_name, (row, fams) in ML_ROWS.items():
        for clf in ("svm", "nb", "maxent"):
            name = f"{row_name}-{clf}"
            out[name] = Preset(name, "learned", row, fams, clf)
    return out


PRESETS = _build()
assert set(p.classifier for p in PRESETS.values() if p.classifier) == set(CLASSIFIERS)


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        raise UsageError(f"unknown experiment preset {name!r}; run 'sentibench presets' for the list") from None
