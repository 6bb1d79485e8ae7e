"""Review corpus loading and tokenization.

Tokenizer rules, applied in order:

====  ==============================================================
step  rule
====  ==============================================================
1     replace U+2019 (right single quote) with ASCII ``'``
2     lowercase the whole text
3     split on whitespace into chunks
4     peel leading punctuation off a chunk, one character per token
5     repeatedly peel from the end of the chunk: a trailing
      punctuation character becomes its own token; a trailing
      ``n't`` (when something precedes it) becomes the token ``n't``
6     what remains of the chunk, if nonempty, is a token
====  ==============================================================

A punctuation character is any character whose Unicode category is
punctuation (``P*``) or symbol (``S*``). Word-internal punctuation is
kept, so ``it's`` and ``well-made`` stay whole.

>>> tokenize("Don't stop.")
['do', "n't", 'stop', '.']
"""

from __future__ import annotations

import enum
import unicodedata
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .errors import CorpusLayoutError, IngestionError

NEGATION_CLITIC = "n't"


class Polarity(enum.Enum):
    NEGATIVE = "neg"
    POSITIVE = "pos"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text):
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f"unknown polarity {text!r}; expected 'pos' or 'neg'") from None

    @property
    def as_int(self):
        """1 for positive, 0 for negative."""
        return 1 if self is Polarity.POSITIVE else 0


def _is_punct(ch):
    return unicodedata.category(ch)[0] in "PS"


def _split_chunk(chunk):
    head = []
    start = 0
    while start < len(chunk) and _is_punct(chunk[start]):
        head.append(chunk[start])
        start += 1
    core = chunk[start:]
    tail = []
    while core:
        if _is_punct(core[-1]):
            tail.append(core[-1])
            core = core[:-1]
        elif len(core) > len(NEGATION_CLITIC) and core.endswith(NEGATION_CLITIC):
            tail.append(NEGATION_CLITIC)
            core = core[: -len(NEGATION_CLITIC)]
        else:
            break
    out = head
    if core:
        out.append(core)
    out.extend(reversed(tail))
    return out


def tokenize(text: str) -> list[str]:
    """Split review text into lowercase tokens (rules in the module docstring)."""
    text = text.replace("’", "'").lower()
    tokens: list[str] = []
    for chunk in text.split():
        tokens.extend(_split_chunk(chunk))
    return tokens


@dataclass(frozen=True)
class Document:
    id: int
    source_name: str
    tokens: tuple[str, ...]
    label: Polarity

    @property
    def stem(self):
        return Path(self.source_name).stem


@dataclass(frozen=True)
class Dataset:
    documents: tuple[Document, ...]

    def __post_init__(self):
        for i, doc in enumerate(self.documents):
            if doc.id != i:
                raise ValueError(f"document ids must be 0..n-1 in order; position {i} has id {doc.id}")

    def __len__(self):
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)

    def __getitem__(self, i):
        return self.documents[i]

    @property
    def counts(self) -> dict[Polarity, int]:
        c = Counter(d.label for d in self.documents)
        return {p: c.get(p, 0) for p in Polarity}

    @property
    def labels(self):
        return [d.label for d in self.documents]

    @classmethod
    def from_texts(cls, items: Sequence[tuple[str, str, Polarity]]) -> "Dataset":
        """Build a dataset from ``(source_name, text, label)`` triples, ids in given order."""
        docs = []
        for i, (name, text, label) in enumerate(items):
            tokens = tokenize(text)
            if not tokens:
                raise IngestionError(f"{name}: document has no tokens")
            docs.append(Document(i, name, tuple(tokens), label))
        return cls(tuple(docs))


def load_corpus(root_path) -> Dataset:
    """Load ``<root>/neg/*.txt`` and ``<root>/pos/*.txt``.

    Ids follow (label directory, sorted filename) order with ``neg`` first.
    """
    root = Path(root_path)
    items = []
    for label in (Polarity.NEGATIVE, Polarity.POSITIVE):
        sub = root / label.value
        if not sub.is_dir():
            raise CorpusLayoutError(f"corpus root {root} has no '{label.value}' subdirectory")
        for path in sorted(sub.glob("*.txt"), key=lambda p: p.name):
            try:
                text = path.read_bytes().decode("utf-8")
            except UnicodeDecodeError as exc:
                raise IngestionError(f"{path}: not valid UTF-8 ({exc.reason} at byte {exc.start})") from None
            items.append((f"{label.value}/{path.name}", text, label))
    return Dataset.from_texts(items)
