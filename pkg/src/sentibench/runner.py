"""Orchestration used by the command-line interface."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .annotations import align
from .classifiers import CLASSIFIERS, TrainConfig
from .corpus import load_corpus
from .errors import ConfigError, UsageError
from .evaluation import ExperimentReport, combo_report, compare, cross_validate, evaluate_lexicon, make_folds
from .features import DEFAULT_MAX_FEATURES, MAXENT_MAX_FEATURES, FeatureSpec
from .lexicon import ScoreConfig, parse_lexicon
from .presets import get_preset


@dataclass
class ExperimentConfig:
    corpus_path: str
    experiment: Optional[str] = None  # preset name
    lexicon_path: Optional[str] = None
    annotations_path: Optional[str] = None
    families: Sequence[str] = ()  # explicit experiment, used when no preset
    classifier: Optional[str] = None
    max_features: Optional[int] = None
    k: int = 3
    seed: int = 42
    train_cfg: TrainConfig = field(default_factory=TrainConfig)
    score_cfg: Optional[ScoreConfig] = None  # explicit lexicon experiment


class Workspace:
    """Inputs loaded once and shared by several experiments."""

    def __init__(self, corpus_path, lexicon_path=None, annotations_path=None):
        self.dataset = load_corpus(corpus_path)
        self.lexicon = parse_lexicon(lexicon_path) if lexicon_path else None
        self._annotations_path = annotations_path
        self._annotations = None

    @property
    def annotations(self):
        if self._annotations is None and self._annotations_path:
            self._annotations = align(self.dataset, self._annotations_path)
        return self._annotations

    def plan(self, k, seed):
        return make_folds(self.dataset, k, seed)


def _resolve(config: ExperimentConfig):
    """Return ('lexicon', name, ScoreConfig) or ('ml', name, FeatureSpec, classifier)."""
    if config.experiment:
        preset = get_preset(config.experiment)
        if preset.is_lexicon:
            return "lexicon", preset.name, preset.score_config()
        return "ml", preset.name, preset.feature_spec(config.max_features), preset.classifier
    if config.score_cfg is not None:
        return "lexicon", "lexicon", config.score_cfg
    if not config.families or not config.classifier:
        raise UsageError("give --experiment, or both --features and --classifier")
    if config.classifier not in CLASSIFIERS:
        raise UsageError(f"unknown classifier {config.classifier!r}")
    default = MAXENT_MAX_FEATURES if config.classifier == "maxent" else DEFAULT_MAX_FEATURES
    spec = FeatureSpec.parse(config.families, config.max_features or default)
    return "ml", f"{'+'.join(spec.names())}-{config.classifier}", spec, config.classifier


def run_in(ws: Workspace, config: ExperimentConfig, name: Optional[str] = None) -> ExperimentReport:
    resolved = _resolve(config)
    plan = ws.plan(config.k, config.seed)
    if resolved[0] == "lexicon":
        if ws.lexicon is None:
            raise ConfigError(f"{resolved[1]} needs --lexicon")
        return evaluate_lexicon(ws.dataset, ws.lexicon, resolved[2], plan, name or resolved[1])
    _, default_name, spec, clf = resolved
    if spec.needs_annotations and ws.annotations is None:
        raise ConfigError(f"{default_name} needs --annotations (POS / dependency files)")
    if spec.needs_lexicon and ws.lexicon is None:
        raise ConfigError(f"{default_name} needs --lexicon")
    return cross_validate(ws.dataset, spec, clf, plan, ws.lexicon, ws.annotations, config.train_cfg, name or default_name)


def run(config: ExperimentConfig) -> ExperimentReport:
    ws = Workspace(config.corpus_path, config.lexicon_path, config.annotations_path)
    return run_in(ws, config)


def sweep_in(ws: Workspace, config: ExperimentConfig, counts: Sequence[int]) -> dict:
    if not counts:
        raise UsageError("sweep needs at least one feature count")
    if _resolve(config)[0] != "ml":
        raise UsageError("feature-count sweeps apply to machine-learning experiments only")
    reports = []
    for n in counts:
        cfg = ExperimentConfig(**{**config.__dict__, "max_features": int(n)})
        reports.append(run_in(ws, cfg, f"{_resolve(cfg)[1]}@{n}"))
    pairs = [compare(a, b) | {"a": a.experiment} for a, b in itertools.combinations(reports, 2)]
    return {
        "format": "sentibench-sweep",
        "version": 1,
        "counts": [int(n) for n in counts],
        "mean_accuracy": [r.mean_accuracy for r in reports],
        "per_fold_accuracy": [r.per_fold_accuracy for r in reports],
        "pairwise": pairs,
        "reports": reports,
    }


def sweep_features(config: ExperimentConfig, counts: Sequence[int]) -> dict:
    ws = Workspace(config.corpus_path, config.lexicon_path, config.annotations_path)
    return sweep_in(ws, config, counts)


def combo(report_paths: Sequence[str]) -> ExperimentReport:
    if not report_paths:
        raise UsageError("combo needs at least one report")
    reports = [ExperimentReport.read(p) for p in report_paths]
    out = combo_report(reports, f"combo[{len(reports)}]")
    best = max(reports, key=lambda r: r.mean_accuracy)
    if out.config["folds"] == len(best.per_fold_accuracy):
        out.add_significance(best)
    return out
