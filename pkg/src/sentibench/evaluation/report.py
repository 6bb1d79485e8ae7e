"""Experiment reports and their JSON serialization.

A report file is a JSON object with these keys:

``format``, ``version``
    ``"sentibench-report"`` and ``1``.
``experiment``
    Name of the experiment (a preset name or a free label).
``config``
    Echo of everything needed to rerun it: features, classifier,
    hyperparameters, folds, seed.
``per_fold_accuracy``, ``mean_accuracy``
    Held-out accuracy per fold (fold order) and their arithmetic mean.
``significance``
    List of blocks ``{"against": name, "per_fold": W, "per_instance": W}``
    where each ``W`` is a Wilcoxon result
    ``{"n_effective", "W", "p_two_sided", "method"}``. ``per_fold`` pairs
    fold accuracies; ``per_instance`` pairs 0/1 correctness indicators.
``instances``
    One row per document: ``doc_id``, ``source``, ``fold``, ``gold`` and
    ``predicted`` (``"pos"``/``"neg"``), sorted by ``doc_id``.

Serialization uses sorted keys and fixed indentation, so equal reports
give byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from ..corpus import Polarity
from ..errors import DataError, InputError
from .wilcoxon import WilcoxonResult, wilcoxon_signed_rank

FORMAT = "sentibench-report"
VERSION = 1


def accuracy(per_instance) -> float:
    """Fraction of ``(gold, predicted)`` pairs that agree.

    Accepts a mapping ``doc_id -> (gold, predicted)`` or an iterable of pairs.
    """
    pairs = list(per_instance.values()) if isinstance(per_instance, Mapping) else list(per_instance)
    if not pairs:
        raise InputError("accuracy of an empty prediction set is undefined")
    return sum(1 for g, p in pairs if g == p) / len(pairs)


@dataclass
class ExperimentReport:
    experiment: str
    config: dict
    per_fold_accuracy: list
    per_instance: dict  # doc_id -> (gold, predicted)
    folds: dict  # doc_id -> fold index
    sources: dict = field(default_factory=dict)  # doc_id -> source name
    significance: list = field(default_factory=list)

    @property
    def mean_accuracy(self) -> float:
        return sum(self.per_fold_accuracy) / len(self.per_fold_accuracy)

    @property
    def accuracy(self) -> float:
        return accuracy(self.per_instance)

    def predictions(self) -> list[Polarity]:
        return [self.per_instance[i][1] for i in sorted(self.per_instance)]

    def golds(self) -> list[Polarity]:
        return [self.per_instance[i][0] for i in sorted(self.per_instance)]

    def correctness(self) -> list[int]:
        return [int(g == p) for g, p in (self.per_instance[i] for i in sorted(self.per_instance))]

    def add_significance(self, other: "ExperimentReport"):
        self.significance.append(compare(self, other))

    def to_dict(self) -> dict:
        return {
            "format": FORMAT,
            "version": VERSION,
            "experiment": self.experiment,
            "config": self.config,
            "per_fold_accuracy": list(self.per_fold_accuracy),
            "mean_accuracy": self.mean_accuracy,
            "significance": self.significance,
            "instances": [
                {
                    "doc_id": i,
                    "source": self.sources.get(i, ""),
                    "fold": self.folds[i],
                    "gold": self.per_instance[i][0].value,
                    "predicted": self.per_instance[i][1].value,
                }
                for i in sorted(self.per_instance)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True) + "\n"

    def write(self, path):
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentReport":
        if d.get("format") != FORMAT or d.get("version") != VERSION:
            raise DataError("not a version-1 sentibench report")
        per_instance, folds, sources = {}, {}, {}
        for row in d["instances"]:
            i = int(row["doc_id"])
            per_instance[i] = (Polarity.parse(row["gold"]), Polarity.parse(row["predicted"]))
            folds[i] = int(row["fold"])
            sources[i] = row.get("source", "")
        return cls(d["experiment"], d["config"], list(d["per_fold_accuracy"]), per_instance, folds, sources, list(d.get("significance", [])))

    @classmethod
    def read(cls, path) -> "ExperimentReport":
        try:
            return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
        except (KeyError, ValueError, TypeError) as exc:
            raise DataError(f"{path}: malformed report ({exc})") from None

    def summary(self) -> str:
        folds = ", ".join(f"{100 * a:.2f}" for a in self.per_fold_accuracy)
        lines = [f"{self.experiment}: mean accuracy {100 * self.mean_accuracy:.2f}% (folds: {folds})"]
        for block in self.significance:
            pf, pi = block["per_fold"], block["per_instance"]
            lines.append(
                f"  vs {block['against']}: per-fold p={pf['p_two_sided']:.4g} (n={pf['n_effective']}), "
                f"per-instance p={pi['p_two_sided']:.4g} (n={pi['n_effective']})"
            )
        return "\n".join(lines)


def per_fold_accuracies(per_instance, folds, k) -> list[float]:
    out = []
    for f in range(k):
        pairs = [per_instance[i] for i in sorted(per_instance) if folds[i] == f]
        out.append(accuracy(pairs))
    return out


def check_same_instances(reports):
    ref = reports[0]
    ids = set(ref.per_instance)
    for r in reports[1:]:
        if set(r.per_instance) != ids:
            raise InputError(f"reports {ref.experiment!r} and {r.experiment!r} cover different documents")
        if any(r.per_instance[i][0] != ref.per_instance[i][0] for i in ids):
            raise InputError(f"reports {ref.experiment!r} and {r.experiment!r} disagree on gold labels")


def compare(a: ExperimentReport, b: ExperimentReport) -> dict:
    """Wilcoxon blocks for ``a`` vs ``b`` over fold accuracies and per-instance correctness."""
    check_same_instances([a, b])
    if len(a.per_fold_accuracy) != len(b.per_fold_accuracy):
        raise InputError("reports use different numbers of folds")
    per_fold: WilcoxonResult = wilcoxon_signed_rank(a.per_fold_accuracy, b.per_fold_accuracy)
    per_inst = wilcoxon_signed_rank(a.correctness(), b.correctness())
    return {"against": b.experiment, "per_fold": per_fold.to_dict(), "per_instance": per_inst.to_dict()}
