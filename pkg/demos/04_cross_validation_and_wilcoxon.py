"""
Stratified cross-validation and paired significance tests
=========================================================
"""

import numpy as np

from sentibench.corpus import Dataset, Polarity
from sentibench.evaluation import compare, cross_validate, make_folds, wilcoxon_signed_rank
from sentibench.features import FeatureSpec

rng = np.random.default_rng(1)
pos_words = ["great", "moving", "superb", "fun"]
neg_words = ["dull", "awful", "boring", "weak"]
filler = ["the", "film", "plot", "cast", "a", "and", "scene"]


def review(lean):
    words = list(rng.choice(filler, size=12)) + list(rng.choice(lean, size=2))
    words += list(rng.choice(pos_words + neg_words, size=2))  # noise
    return " ".join(words)


items = [(f"neg/{i}", review(neg_words), Polarity.NEGATIVE) for i in range(60)]
items += [(f"pos/{i}", review(pos_words), Polarity.POSITIVE) for i in range(60)]
ds = Dataset.from_texts(items)

# Seeded, stratified folds: the same seed always gives the same partition.
plan = make_folds(ds, k=3, seed=42)
print("fold sizes", plan.sizes())

spec = FeatureSpec.parse(["unigram", "bigram"], max_features=200)
nb = cross_validate(ds, spec, "nb", plan, name="nb")
svm = cross_validate(ds, spec, "svm", plan, name="svm")
print(nb.summary())
print(svm.summary())

# Two pairings: fold accuracies (n = k) and per-document correctness.
block = compare(svm, nb)
print("per-fold", block["per_fold"])
print("per-instance", block["per_instance"])

# With three folds the smallest two-sided exact p is 2/8.
print(wilcoxon_signed_rank([0.9, 0.8, 0.85], [0.7, 0.6, 0.65]).p_two_sided)
