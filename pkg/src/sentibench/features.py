"""Feature extraction, vocabulary selection and binary vectorization.

N-gram parts are joined with ``_`` (``good_film``); word/tag pairs with
``+`` (``great+ADJ``, ``this+nsubj``).
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np
import scipy.sparse as sp

from .annotations import COARSE_TAGS, AnnotatedDocument
from .errors import ConfigError, VocabularyError

DEFAULT_MAX_FEATURES = 10000
MAXENT_MAX_FEATURES = 5000


class Family(enum.Enum):
    UNIGRAM = "unigram"
    BIGRAM = "bigram"
    TRIGRAM = "trigram"
    WORD_POS = "word-pos"
    WORD_AND_WORD_POS = "word-and-word-pos"
    POS_ONLY = "pos-only"
    LEXICON_WORDS = "lexicon-words"
    DEP_PAIR = "dep-pair"


ANNOTATED_FAMILIES = frozenset({Family.WORD_POS, Family.WORD_AND_WORD_POS, Family.POS_ONLY, Family.DEP_PAIR})
_NGRAM_ORDER = {Family.UNIGRAM: 1, Family.BIGRAM: 2, Family.TRIGRAM: 3}


@dataclass(frozen=True)
class FeatureSpec:
    families: frozenset
    max_features: int = DEFAULT_MAX_FEATURES
    pos_tags: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "families", frozenset(self.families))
        object.__setattr__(self, "pos_tags", frozenset(t.upper() for t in self.pos_tags))
        if not self.families:
            raise ConfigError("feature spec needs at least one family")
        if Family.POS_ONLY in self.families and not self.pos_tags:
            raise ConfigError("pos-only family needs a nonempty tag set")
        unknown = self.pos_tags - set(COARSE_TAGS)
        if unknown:
            raise ConfigError(f"unknown POS tags {sorted(unknown)}; choose from {COARSE_TAGS}")
        if self.max_features < 1:
            raise ConfigError("max_features must be positive")

    @classmethod
    def parse(cls, names: Iterable[str], max_features: int = DEFAULT_MAX_FEATURES) -> "FeatureSpec":
        """Build from CLI names such as ``unigram`` or ``pos-only:adj|noun``."""
        fams = set()
        tags = set()
        for name in names:
            base, _, arg = name.partition(":")
            try:
                fam = Family(base)
            except ValueError:
                raise ConfigError(f"unknown feature family {base!r}") from None
            if fam is Family.POS_ONLY:
                tags.update(t for t in arg.split("|") if t)
            elif arg:
                raise ConfigError(f"family {base!r} takes no argument")
            fams.add(fam)
        return cls(frozenset(fams), max_features, frozenset(tags))

    @property
    def needs_annotations(self) -> bool:
        return bool(self.families & ANNOTATED_FAMILIES)

    @property
    def needs_lexicon(self) -> bool:
        return Family.LEXICON_WORDS in self.families

    def names(self) -> list[str]:
        out = []
        for fam in sorted(self.families, key=lambda f: f.value):
            if fam is Family.POS_ONLY:
                out.append("pos-only:" + "|".join(sorted(t.lower() for t in self.pos_tags)))
            else:
                out.append(fam.value)
        return out


def extract_ngrams(tokens: Sequence[str], n: int) -> list[str]:
    if n not in (1, 2, 3):
        raise ValueError("n must be 1, 2 or 3")
    return ["_".join(tokens[i : i + n]) for i in range(len(tokens) - n + 1)]


def extract_word_pos(annotated: AnnotatedDocument) -> list[str]:
    return [f"{t.form.lower()}+{t.pos}" for t in annotated.tokens()]


def extract_word_and_word_pos(annotated: AnnotatedDocument) -> list[str]:
    out = []
    for t in annotated.tokens():
        form = t.form.lower()
        out.append(form)
        out.append(f"{form}+{t.pos}")
    return out


def extract_pos_filtered(annotated: AnnotatedDocument, tags) -> list[str]:
    tags = {t.upper() for t in tags}
    return [t.form.lower() for t in annotated.tokens() if t.pos in tags]


def extract_dependency_pairs(annotated: AnnotatedDocument) -> list[str]:
    # Each token paired with the label of its own incoming arc; positions dropped.
    return [f"{t.form.lower()}+{t.deprel}" for t in annotated.tokens()]


def extract_lexicon_words(tokens: Sequence[str], lexicon) -> list[str]:
    return [t for t in tokens if t in lexicon.index]


def document_features(doc, spec: FeatureSpec, annotated: Optional[AnnotatedDocument] = None, lexicon=None) -> list[str]:
    """All feature strings of one document for the families in ``spec``."""
    if spec.needs_annotations and annotated is None:
        raise ConfigError(f"document {doc.id}: feature families {spec.names()} need annotations")
    if spec.needs_lexicon and lexicon is None:
        raise ConfigError("lexicon-words family needs a lexicon")
    feats: list[str] = []
    for fam in sorted(spec.families, key=lambda f: f.value):
        if fam in _NGRAM_ORDER:
            feats.extend(extract_ngrams(doc.tokens, _NGRAM_ORDER[fam]))
        elif fam is Family.WORD_POS:
            feats.extend(extract_word_pos(annotated))
        elif fam is Family.WORD_AND_WORD_POS:
            feats.extend(extract_word_and_word_pos(annotated))
        elif fam is Family.POS_ONLY:
            feats.extend(extract_pos_filtered(annotated, spec.pos_tags))
        elif fam is Family.DEP_PAIR:
            feats.extend(extract_dependency_pairs(annotated))
        elif fam is Family.LEXICON_WORDS:
            feats.extend(extract_lexicon_words(doc.tokens, lexicon))
    return feats


class Vocabulary:
    """Feature string to column index, indices ``0..len-1``."""

    def __init__(self, features: Sequence[str]):
        self.features = tuple(features)
        self.index = {f: i for i, f in enumerate(self.features)}
        if len(self.index) != len(self.features):
            raise VocabularyError("duplicate features in vocabulary")

    def __len__(self):
        return len(self.features)

    def __contains__(self, feature):
        return feature in self.index

    def __eq__(self, other):
        return isinstance(other, Vocabulary) and self.features == other.features

    def __repr__(self):
        return f"Vocabulary({len(self)} features)"


def select_vocabulary(feature_lists: Iterable[Iterable[str]], max_features: int, reserved: Iterable[str] = ()) -> Vocabulary:
    """Rank features by document frequency (desc), then lexicographically.

    ``reserved`` features come first, sorted, and are always kept; corpus
    features fill whatever room the cap leaves. A reserved list longer
    than the cap therefore yields a vocabulary of exactly that list.
    """
    df: Counter = Counter()
    for feats in feature_lists:
        df.update(set(feats))
    head = sorted(set(reserved))
    taken = set(head)
    ranked = sorted((f for f in df if f not in taken), key=lambda f: (-df[f], f))
    chosen = head + ranked[: max(0, max_features - len(head))]
    if not chosen:
        raise VocabularyError("no features found in training documents")
    return Vocabulary(chosen)


def build_vocabulary(train_docs, spec: FeatureSpec, lexicon=None, annotations=None) -> Vocabulary:
    """Vocabulary from training documents only (plus lexicon words if requested)."""
    train_docs = list(train_docs)
    if not train_docs:
        raise VocabularyError("no training documents")
    annotations = annotations or {}
    lists = (document_features(d, spec, annotations.get(d.id), lexicon) for d in train_docs)
    reserved = lexicon.unique_words if spec.needs_lexicon else ()
    return select_vocabulary(lists, spec.max_features, reserved)


@dataclass(frozen=True)
class FeatureVector:
    doc_id: int
    on_indices: tuple[int, ...]


def vectorize(doc_features: Iterable[str], vocab: Vocabulary, doc_id: int = -1) -> FeatureVector:
    """Binary presence vector; out-of-vocabulary features are dropped."""
    idx = vocab.index
    on = sorted({idx[f] for f in doc_features if f in idx})
    return FeatureVector(doc_id, tuple(on))


def to_matrix(vectors: Sequence[FeatureVector], dim: int) -> sp.csr_matrix:
    indptr = np.zeros(len(vectors) + 1, dtype=np.int64)
    for i, v in enumerate(vectors):
        indptr[i + 1] = indptr[i] + len(v.on_indices)
    indices = np.fromiter((j for v in vectors for j in v.on_indices), dtype=np.int64, count=int(indptr[-1]))
    data = np.ones(len(indices), dtype=np.float64)
    return sp.csr_matrix((data, indices, indptr), shape=(len(vectors), dim))
