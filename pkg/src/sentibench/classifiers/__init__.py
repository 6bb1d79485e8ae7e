"""Naive Bayes, maximum entropy and SMO-trained linear SVM classifiers.

Training functions take a binary design matrix ``X`` (scipy sparse or
dense, one row per document) and labels ``y`` with 1 = positive,
0 = negative.
"""

from __future__ import annotations

import numpy as np

from ..errors import ConfigError
from .config import TrainConfig
from .io import dumps_model, load_model, loads_model, save_model
from .linear import LinearModel
from .maxent import maxent_fit, maxent_predict, maxent_train, predict_proba
from .naive_bayes import NBModel, nb_predict, nb_predict_matrix, nb_train
from .smo import smo_solve, svm_fit, svm_predict, svm_train

CLASSIFIERS = ("nb", "maxent", "svm")


def train(name: str, X, y, cfg: TrainConfig = TrainConfig()):
    if name == "nb":
        return nb_train(X, y, cfg)
    if name == "maxent":
        return maxent_train(X, y, cfg)
    if name == "svm":
        return svm_train(X, y, cfg)
    raise ConfigError(f"unknown classifier {name!r}; choose from {', '.join(CLASSIFIERS)}")


def predict_labels(model, X) -> np.ndarray:
    """0/1 predictions for every row of ``X``; score ties go to 0 (negative)."""
    if isinstance(model, NBModel):
        return nb_predict_matrix(model, X)[0]
    return (model.scores(X) > 0).astype(np.int64)


__all__ = [
    "CLASSIFIERS",
    "LinearModel",
    "NBModel",
    "TrainConfig",
    "dumps_model",
    "load_model",
    "loads_model",
    "maxent_fit",
    "maxent_predict",
    "maxent_train",
    "nb_predict",
    "nb_predict_matrix",
    "nb_train",
    "predict_labels",
    "predict_proba",
    "save_model",
    "smo_solve",
    "svm_fit",
    "svm_predict",
    "svm_train",
    "train",
]
