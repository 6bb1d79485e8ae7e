import os
from pathlib import Path

import numpy as np
import pytest

from sentibench.corpus import Dataset, Polarity

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def write_corpus(root: Path, pos_texts, neg_texts):
    for label, texts in (("pos", pos_texts), ("neg", neg_texts)):
        d = root / label
        d.mkdir(parents=True, exist_ok=True)
        for i, t in enumerate(texts):
            (d / f"{label}{i:03d}.txt").write_text(t, encoding="utf-8")
    return root


@pytest.fixture
def tiny_corpus(tmp_path):
    return write_corpus(tmp_path / "corpus", ["a fine film ."], ["a dull film ."])


@pytest.fixture
def separable_corpus(tmp_path):
    """Six documents whose class is fixed by a single marker word.

    Every other word occurs in all six, so absent-feature evidence in
    Bernoulli NB cannot outvote the marker.
    """
    pos = ["superb acting and plot", "plot and acting superb", "superb superb acting plot and"]
    neg = ["awful acting and plot", "plot and acting awful", "awful awful acting plot and"]
    return write_corpus(tmp_path / "sep", pos, neg)


def random_dataset(rng, n_per_class, vocab=30, length=(3, 12)):
    """Balanced synthetic dataset; positives lean on the low word ids."""
    items = []
    for label in (Polarity.NEGATIVE, Polarity.POSITIVE):
        for i in range(n_per_class):
            n = rng.integers(*length)
            bias = 0.3 if label is Polarity.POSITIVE else 0.7
            words = [f"w{int(rng.beta(2, 2) * vocab * bias + rng.integers(0, vocab // 2))}" for _ in range(n)]
            items.append((f"{label.value}/{i:03d}.txt", " ".join(words), label))
    return Dataset.from_texts(items)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def env_path(name):
    value = os.environ.get(name)
    return Path(value) if value else None
