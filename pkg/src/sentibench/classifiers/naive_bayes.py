"""Bernoulli Naive Bayes over binary presence vectors.

Every vocabulary feature contributes to the class score, through
``log P(on | c)`` when present in the document and ``log P(off | c)``
when absent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..corpus import Polarity
from ..errors import DimensionError, TrainingError
from .config import TrainConfig
from .linear import check_indices

# row 0 = negative class, row 1 = positive class


@dataclass(frozen=True, eq=False)
class NBModel:
    log_prior: np.ndarray  # (2,)
    log_on: np.ndarray  # (2, D)
    log_off: np.ndarray  # (2, D)

    def __post_init__(self):
        for name in ("log_prior", "log_on", "log_off"):
            arr = np.asarray(getattr(self, name), dtype=np.float64)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        # Score of the all-absent document, reused by every prediction.
        object.__setattr__(self, "_base", self.log_prior + self.log_off.sum(axis=1))
        object.__setattr__(self, "_delta", (self.log_on - self.log_off).T.copy())

    @property
    def vocab_size(self):
        return self.log_on.shape[1]

    def __eq__(self, other):
        return isinstance(other, NBModel) and all(
            np.array_equal(getattr(self, n), getattr(other, n)) for n in ("log_prior", "log_on", "log_off")
        )

    def class_scores(self, X) -> np.ndarray:
        """``(n, 2)`` unnormalized log posteriors for a binary matrix."""
        if X.shape[1] != self.vocab_size:
            raise DimensionError(f"matrix has {X.shape[1]} columns, model expects {self.vocab_size}")
        return np.asarray(X @ self._delta) + self._base


def nb_train(X, y, cfg: TrainConfig = TrainConfig()) -> NBModel:
    """Fit class priors and add-alpha smoothed Bernoulli likelihoods.

    ``y`` holds 1 for positive and 0 for negative documents.
    """
    y = np.asarray(y)
    n_pos = int((y == 1).sum())
    n_neg = int((y == 0).sum())
    if n_pos == 0 or n_neg == 0:
        raise TrainingError("Naive Bayes needs both classes in the training data")
    alpha = cfg.nb_smoothing
    class_counts = np.array([n_neg, n_pos], dtype=np.float64)
    onehot = np.stack([(y == 0), (y == 1)], axis=1).astype(np.float64)
    on_counts = np.asarray((X.T @ onehot).T)  # (2, D)
    p_on = (on_counts + alpha) / (class_counts[:, None] + 2 * alpha)
    return NBModel(
        log_prior=np.log(class_counts / class_counts.sum()),
        log_on=np.log(p_on),
        log_off=np.log1p(-p_on),
    )


# Class scores this close (relative) count as a tie, which goes negative;
# summation order alone can otherwise split an exact tie.
TIE_RTOL = 1e-12


def _decide(scores):
    top = scores.max(axis=-1, keepdims=True)
    z = np.exp(scores - top)
    post_pos = z[..., 1] / z.sum(axis=-1)
    gap = scores[..., 1] - scores[..., 0]
    scale = np.maximum(1.0, np.abs(scores).max(axis=-1))
    return gap > TIE_RTOL * scale, post_pos


def nb_predict(model: NBModel, vector) -> tuple[Polarity, float]:
    """Label and posterior probability of the positive class."""
    on = np.asarray(vector.on_indices, dtype=np.int64)
    check_indices(on, model.vocab_size)
    scores = model._base + model._delta[on].sum(axis=0)
    is_pos, post = _decide(scores)
    return (Polarity.POSITIVE if is_pos else Polarity.NEGATIVE), float(post)


def nb_predict_matrix(model: NBModel, X) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized :func:`nb_predict`: (0/1 labels, positive posteriors)."""
    is_pos, post = _decide(model.class_scores(X))
    return is_pos.astype(np.int64), post
