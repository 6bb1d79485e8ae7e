from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..corpus import Polarity
from ..errors import DimensionError

MAXENT = "maxent"
SVM = "svm"


@dataclass(frozen=True, eq=False)
class LinearModel:
    """Weight vector and bias; the decision score is ``w.x + b``."""

    w: np.ndarray
    b: float
    kind: str

    def __post_init__(self):
        w = np.asarray(self.w, dtype=np.float64)
        w.setflags(write=False)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "b", float(self.b))
        if self.kind not in (MAXENT, SVM):
            raise ValueError(f"unknown linear model kind {self.kind!r}")
        if not (np.all(np.isfinite(w)) and np.isfinite(self.b)):
            raise ValueError("model parameters must be finite")

    @property
    def dim(self):
        return self.w.shape[0]

    def __eq__(self, other):
        return (
            isinstance(other, LinearModel)
            and self.kind == other.kind
            and self.b == other.b
            and np.array_equal(self.w, other.w)
        )

    def score(self, vector) -> float:
        on = np.asarray(vector.on_indices, dtype=np.int64)
        check_indices(on, self.dim)
        return float(self.w[on].sum() + self.b)

    def scores(self, X) -> np.ndarray:
        if X.shape[1] != self.dim:
            raise DimensionError(f"matrix has {X.shape[1]} columns, model expects {self.dim}")
        return np.asarray(X @ self.w).ravel() + self.b


def check_indices(on, dim):
    if on.size and (on.max() >= dim or on.min() < 0):
        raise DimensionError(f"feature index out of range for dimension {dim}")


def label_from_score(score: float) -> Polarity:
    return Polarity.POSITIVE if score > 0 else Polarity.NEGATIVE
