"""Sentiment classification workbench: lexicon scoring versus bag-of-words learners."""

from .corpus import Dataset, Document, Polarity, load_corpus, tokenize

__version__ = "0.1.0"

__all__ = ["Dataset", "Document", "Polarity", "load_corpus", "tokenize"]
