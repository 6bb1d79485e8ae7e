"""Subjectivity lexicon parsing and rule-based polarity scoring.

Lexicon records are single lines of ``key=value`` pairs::

    type=strongsubj len=1 word1=great pos1=adj stemmed1=n priorpolarity=positive

Only ``positive`` / ``negative`` prior polarities are kept; other values
(``neutral``, ``both``, ...) are skipped and counted in
:attr:`Lexicon.skipped`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping, Optional, Sequence

from .corpus import NEGATION_CLITIC, Polarity
from .errors import ConfigError, LexiconParseError


class Weight(enum.Enum):
    WEAK = "weaksubj"
    STRONG = "strongsubj"


class PosConstraint(enum.Enum):
    ADJ = "adj"
    VERB = "verb"
    NOUN = "noun"
    ANYPOS = "anypos"


_CONSTRAINT_TAG = {PosConstraint.ADJ: "ADJ", PosConstraint.VERB: "VERB", PosConstraint.NOUN: "NOUN"}
_REQUIRED = ("type", "len", "word1", "pos1", "stemmed1", "priorpolarity")
_POLARITY = {"positive": Polarity.POSITIVE, "negative": Polarity.NEGATIVE}


@dataclass(frozen=True)
class LexiconEntry:
    weight: Weight
    word: str
    pos_constraint: PosConstraint
    stemmed: bool
    polarity: Polarity


@dataclass(frozen=True)
class Lexicon:
    entries: tuple[LexiconEntry, ...]
    skipped: int = 0
    index: Mapping[str, tuple[LexiconEntry, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index: dict[str, list[LexiconEntry]] = {}
        exact: dict[str, list[tuple[int, LexiconEntry]]] = {}
        stems: dict[str, list[tuple[int, LexiconEntry]]] = {}
        for i, e in enumerate(self.entries):
            index.setdefault(e.word, []).append(e)
            (stems if e.stemmed else exact).setdefault(e.word, []).append((i, e))
        object.__setattr__(self, "index", {w: tuple(es) for w, es in index.items()})
        object.__setattr__(self, "_exact", exact)
        object.__setattr__(self, "_stems", stems)
        object.__setattr__(self, "_max_stem", max((len(w) for w in stems), default=0))

    def __len__(self):
        return len(self.entries)

    @property
    def unique_words(self) -> list[str]:
        return sorted(self.index)

    def candidates(self, token: str):
        """Entries whose word test passes for ``token``, in file order."""
        found = list(self._exact.get(token, ()))
        for k in range(1, min(len(token), self._max_stem) + 1):
            found.extend(self._stems.get(token[:k], ()))
        found.sort(key=lambda pair: pair[0])
        return [e for _, e in found]

    def lookup(self, token: str, pos: Optional[str] = None) -> Optional[LexiconEntry]:
        """First entry in file order matching ``token`` (and ``pos`` if given)."""
        for e in self.candidates(token):
            if match(e, token, pos):
                return e
        return None

    def with_polarities_swapped(self) -> "Lexicon":
        flip = {Polarity.POSITIVE: Polarity.NEGATIVE, Polarity.NEGATIVE: Polarity.POSITIVE}
        return Lexicon(tuple(replace(e, polarity=flip[e.polarity]) for e in self.entries), self.skipped)


def parse_lexicon_lines(lines) -> Lexicon:
    entries = []
    skipped = 0
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = {}
        for part in line.split():
            key, sep, value = part.partition("=")
            if not sep:
                raise LexiconParseError(f"malformed field {part!r}", lineno)
            fields[key] = value
        missing = [k for k in _REQUIRED if k not in fields]
        if missing:
            raise LexiconParseError(f"missing required key(s): {', '.join(missing)}", lineno)
        prior = fields["priorpolarity"]
        if prior not in _POLARITY:
            skipped += 1
            continue
        try:
            weight = Weight(fields["type"])
        except ValueError:
            raise LexiconParseError(f"unknown type {fields['type']!r}", lineno) from None
        try:
            pos = PosConstraint(fields["pos1"])
        except ValueError:
            raise LexiconParseError(f"unknown pos1 {fields['pos1']!r}", lineno) from None
        if fields["stemmed1"] not in ("y", "n"):
            raise LexiconParseError(f"stemmed1 must be y or n, got {fields['stemmed1']!r}", lineno)
        word = fields["word1"].lower()
        if not word:
            raise LexiconParseError("empty word1", lineno)
        entries.append(LexiconEntry(weight, word, pos, fields["stemmed1"] == "y", _POLARITY[prior]))
    return Lexicon(tuple(entries), skipped)


def parse_lexicon(path) -> Lexicon:
    with open(Path(path), encoding="utf-8") as fh:
        return parse_lexicon_lines(fh)


def match(entry: LexiconEntry, token: str, pos: Optional[str] = None) -> bool:
    """Word test (prefix when stemmed, else equality) plus POS constraint.

    A missing ``pos`` always satisfies the constraint.
    """
    if entry.stemmed:
        if not token.startswith(entry.word):
            return False
    elif token != entry.word:
        return False
    if entry.pos_constraint is PosConstraint.ANYPOS or pos is None:
        return True
    return pos == _CONSTRAINT_TAG[entry.pos_constraint]


@dataclass(frozen=True)
class ScoreConfig:
    use_weights: bool = True
    strong_points: int = 5
    weak_points: int = 1
    negation_token: Optional[str] = None

    def __post_init__(self):
        if not (self.strong_points >= self.weak_points >= 1):
            raise ConfigError("need strong_points >= weak_points >= 1")

    @classmethod
    def preset(cls, weights: bool, negation: bool) -> "ScoreConfig":
        return cls(use_weights=weights, negation_token=NEGATION_CLITIC if negation else None)


def token_points(entry: Optional[LexiconEntry], cfg: ScoreConfig) -> int:
    if entry is None:
        return 0
    if not cfg.use_weights:
        pts = 1
    elif entry.weight is Weight.STRONG:
        pts = cfg.strong_points
    else:
        pts = cfg.weak_points
    return pts if entry.polarity is Polarity.POSITIVE else -pts


def score_tokens(tokens: Sequence[str], lexicon: Lexicon, cfg: ScoreConfig, pos_tags: Optional[Sequence[str]] = None) -> int:
    score = 0
    cache: dict = {}
    for i, tok in enumerate(tokens):
        if cfg.negation_token is not None and tok == cfg.negation_token:
            score -= cfg.strong_points
            continue
        pos = None if pos_tags is None else pos_tags[i]
        key = (tok, pos)
        if key not in cache:
            cache[key] = token_points(lexicon.lookup(tok, pos), cfg)
        score += cache[key]
    return score


def score_document(doc, lexicon: Lexicon, cfg: ScoreConfig) -> int:
    """Signed lexicon score of a document's tokens.

    With ``negation_token`` set, each occurrence of that token subtracts
    ``strong_points`` in place of any lexicon match it might have.
    """
    return score_tokens(doc.tokens, lexicon, cfg)


def classify_by_score(score: int) -> Polarity:
    return Polarity.POSITIVE if score > 0 else Polarity.NEGATIVE
