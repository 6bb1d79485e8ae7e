"""Seeded stratified fold assignment.

The generator is SplitMix64: ``state += 0x9E3779B97F4A7C15`` then the
output mix ``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
z *= 0x94D049BB133111EB; z ^= z >> 31`` (all mod 2**64).

One generator, seeded with ``seed``, drives a Fisher-Yates shuffle of
the negative documents and then of the positive documents (each list in
ascending id order before shuffling; ``j = next() % (i + 1)`` for
``i = n-1 .. 1``). The shuffled negatives followed by the shuffled
positives are then dealt to folds ``0, 1, ..., k-1, 0, 1, ...`` with a
single counter, so per-class and total fold sizes each differ by at
most one.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..corpus import Polarity
from ..errors import FoldError

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)


def shuffle(items: list, rng: SplitMix64) -> list:
    items = list(items)
    for i in range(len(items) - 1, 0, -1):
        j = rng.next() % (i + 1)
        items[i], items[j] = items[j], items[i]
    return items


@dataclass(frozen=True)
class FoldPlan:
    k: int
    seed: int
    assignment: tuple[int, ...]  # assignment[doc_id] = fold index

    def test_ids(self, fold: int) -> list[int]:
        return [i for i, f in enumerate(self.assignment) if f == fold]

    def train_ids(self, fold: int) -> list[int]:
        return [i for i, f in enumerate(self.assignment) if f != fold]

    def sizes(self) -> list[int]:
        out = [0] * self.k
        for f in self.assignment:
            out[f] += 1
        return out


def make_folds(dataset, k: int = 3, seed: int = 42) -> FoldPlan:
    if k < 2:
        raise FoldError("need at least 2 folds")
    by_class = {p: [d.id for d in dataset if d.label is p] for p in (Polarity.NEGATIVE, Polarity.POSITIVE)}
    for p, ids in by_class.items():
        if len(ids) < k:
            raise FoldError(f"class {p.value} has {len(ids)} documents, fewer than k={k}")
    rng = SplitMix64(seed)
    assignment = [-1] * len(dataset)
    counter = 0
    for p in (Polarity.NEGATIVE, Polarity.POSITIVE):
        for doc_id in shuffle(by_class[p], rng):
            assignment[doc_id] = counter % k
            counter += 1
    return FoldPlan(k, seed, tuple(assignment))
