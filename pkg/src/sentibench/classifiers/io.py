"""Model persistence.

Models are stored as UTF-8 JSON::

    {"format": "sentibench-model", "version": 1, "type": "nb" | "maxent" | "svm", ...}

``nb`` carries ``log_prior`` (2 numbers, negative class first), ``log_on``
and ``log_off`` (two rows of D numbers each); ``maxent`` and ``svm`` carry
``w`` (D numbers) and ``b``. Floats are written with Python's shortest
round-trip repr, so loading restores bit-identical parameters.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from ..errors import DataError
from .linear import LinearModel
from .naive_bayes import NBModel

FORMAT = "sentibench-model"
VERSION = 1


def model_to_dict(model) -> dict:
    if isinstance(model, NBModel):
        return {
            "format": FORMAT,
            "version": VERSION,
            "type": "nb",
            "log_prior": model.log_prior.tolist(),
            "log_on": model.log_on.tolist(),
            "log_off": model.log_off.tolist(),
        }
    if isinstance(model, LinearModel):
        return {"format": FORMAT, "version": VERSION, "type": model.kind, "w": model.w.tolist(), "b": model.b}
    raise TypeError(f"cannot serialize {type(model).__name__}")


def model_from_dict(d: dict):
    if d.get("format") != FORMAT:
        raise DataError("not a sentibench model file")
    if d.get("version") != VERSION:
        raise DataError(f"unsupported model format version {d.get('version')!r}")
    kind = d.get("type")
    if kind == "nb":
        return NBModel(np.array(d["log_prior"]), np.array(d["log_on"]), np.array(d["log_off"]))
    if kind in ("maxent", "svm"):
        return LinearModel(np.array(d["w"], dtype=np.float64), d["b"], kind)
    raise DataError(f"unknown model type {kind!r}")


def dumps_model(model) -> str:
    return json.dumps(model_to_dict(model), separators=(",", ":"))


def loads_model(text: str):
    return model_from_dict(json.loads(text))


def save_model(model, path):
    Path(path).write_text(dumps_model(model), encoding="utf-8")


def load_model(path):
    return loads_model(Path(path).read_text(encoding="utf-8"))
