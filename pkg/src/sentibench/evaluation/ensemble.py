from __future__ import annotations

from typing import Sequence

from ..corpus import Polarity
from ..errors import InputError


def ensemble_mode(predictions: Sequence[Sequence[Polarity]]) -> list[Polarity]:
    """Per-instance majority vote over systems; an exact tie goes to negative."""
    if not predictions:
        raise InputError("need at least one system")
    n = len(predictions[0])
    if any(len(row) != n for row in predictions):
        raise InputError("all systems must predict the same number of instances")
    out = []
    half = len(predictions) / 2
    for j in range(n):
        pos = sum(1 for row in predictions if row[j] is Polarity.POSITIVE)
        out.append(Polarity.POSITIVE if pos > half else Polarity.NEGATIVE)
    return out
