"""
Scoring documents with a subjectivity lexicon
=============================================
"""

from sentibench.corpus import Document, Polarity, tokenize
from sentibench.lexicon import ScoreConfig, classify_by_score, parse_lexicon_lines, score_document

# One clue per line, key=value pairs.  stemmed1=y means prefix matching.
lexicon = parse_lexicon_lines([
    "type=strongsubj len=1 word1=brilliant pos1=adj stemmed1=n priorpolarity=positive",
    "type=weaksubj len=1 word1=enjoy pos1=verb stemmed1=y priorpolarity=positive",
    "type=strongsubj len=1 word1=boring pos1=adj stemmed1=n priorpolarity=negative",
    "type=weaksubj len=1 word1=plain pos1=adj stemmed1=n priorpolarity=neutral",
])
print(len(lexicon.entries), "clues kept,", lexicon.skipped, "skipped (neutral or both)")

doc = Document(0, "demo", tuple(tokenize("I didn't enjoy it; brilliant actors, boring script.")), Polarity.NEGATIVE)
print(doc.tokens)

# The three lexicon settings: unit weights, strong/weak weights, and weights
# with "n't" counted as a strong negative clue.
for weights, negation in [(False, False), (True, False), (True, True)]:
    cfg = ScoreConfig.preset(weights, negation)
    s = score_document(doc, lexicon, cfg)
    print(f"weights={weights!s:5} negation={negation!s:5} score={s:+d} -> {classify_by_score(s).value}")

# A score of exactly zero is classified negative.
print(classify_by_score(0).value)
