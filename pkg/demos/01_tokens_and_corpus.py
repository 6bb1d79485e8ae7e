"""
Tokenizing reviews and loading a corpus directory
=================================================
"""

import tempfile
from pathlib import Path

from sentibench import load_corpus, tokenize

# Lowercase, punctuation split off, the clitic "n't" as its own token.
print(tokenize("It wasn't GREAT, but (honestly) fine!"))

# Curly apostrophes are folded first, so both spellings agree.
print(tokenize("didn’t") == tokenize("didn't"))

# A corpus is a directory with pos/ and neg/ subdirectories of .txt files.
root = Path(tempfile.mkdtemp())
for label, texts in {"pos": ["A moving, funny film.", "Superb cast."], "neg": ["Dull.", "It isn't worth it."]}.items():
    (root / label).mkdir()
    for i, text in enumerate(texts):
        (root / label / f"r{i}.txt").write_text(text, encoding="utf-8")

ds = load_corpus(root)
print(ds.counts)  # documents per class
for doc in ds:
    # ids are dense: negatives first, then positives, file names sorted
    print(doc.id, doc.label.value, doc.source_name, doc.tokens)
