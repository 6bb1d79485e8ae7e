from __future__ import annotations

import logging

import numpy as np

from ..classifiers import TrainConfig, predict_labels, train
from ..corpus import Polarity
from ..errors import SentibenchError
from ..features import FeatureSpec, document_features, select_vocabulary, to_matrix, vectorize
from ..lexicon import ScoreConfig, classify_by_score, score_document
from .ensemble import ensemble_mode
from .folds import FoldPlan
from .report import ExperimentReport, check_same_instances, per_fold_accuracies

log = logging.getLogger(__name__)

_LABELS = (Polarity.NEGATIVE, Polarity.POSITIVE)


def cross_validate(
    dataset,
    feature_spec: FeatureSpec,
    classifier: str,
    fold_plan: FoldPlan,
    lexicon=None,
    annotations=None,
    train_cfg: TrainConfig = TrainConfig(),
    name: str = "",
) -> ExperimentReport:
    """Train on k-1 folds, predict the held-out fold, for every fold.

    The vocabulary of each fold is selected from that fold's training
    documents only.
    """
    annotations = annotations or {}
    feats = [document_features(d, feature_spec, annotations.get(d.id), lexicon) for d in dataset]
    reserved = lexicon.unique_words if feature_spec.needs_lexicon else ()
    y = np.array([d.label.as_int for d in dataset])
    per_instance = {}
    for fold in range(fold_plan.k):
        train_ids = fold_plan.train_ids(fold)
        test_ids = fold_plan.test_ids(fold)
        try:
            vocab = select_vocabulary((feats[i] for i in train_ids), feature_spec.max_features, reserved)
            X_train = to_matrix([vectorize(feats[i], vocab, i) for i in train_ids], len(vocab))
            X_test = to_matrix([vectorize(feats[i], vocab, i) for i in test_ids], len(vocab))
            model = train(classifier, X_train, y[train_ids], train_cfg)
            pred = predict_labels(model, X_test)
        except SentibenchError as exc:
            exc.args = (f"fold {fold}: {exc}",) + exc.args[1:]
            raise
        for i, p in zip(test_ids, pred):
            per_instance[i] = (dataset[i].label, _LABELS[int(p)])
        log.info("%s fold %d: %d features, accuracy %.4f", name or classifier, fold, len(vocab),
                 float(np.mean(pred == y[test_ids])))
    config = {
        "kind": "ml",
        "features": feature_spec.names(),
        "max_features": feature_spec.max_features,
        "classifier": classifier,
        "train_config": train_cfg.to_dict(),
        "folds": fold_plan.k,
        "seed": fold_plan.seed,
    }
    return _report(name or f"{'+'.join(feature_spec.names())}-{classifier}", config, dataset, fold_plan, per_instance)


def evaluate_lexicon(dataset, lexicon, score_cfg: ScoreConfig, fold_plan: FoldPlan, name: str = "") -> ExperimentReport:
    """Score every document; fold accuracies use the same plan as the learners."""
    per_instance = {d.id: (d.label, classify_by_score(score_document(d, lexicon, score_cfg))) for d in dataset}
    config = {
        "kind": "lexicon",
        "use_weights": score_cfg.use_weights,
        "strong_points": score_cfg.strong_points,
        "weak_points": score_cfg.weak_points,
        "negation_token": score_cfg.negation_token,
        "folds": fold_plan.k,
        "seed": fold_plan.seed,
    }
    return _report(name or "lexicon", config, dataset, fold_plan, per_instance)


def combo_report(reports, name: str = "combo") -> ExperimentReport:
    """Mode vote over the per-instance predictions of several reports."""
    check_same_instances(reports)
    ids = sorted(reports[0].per_instance)
    votes = ensemble_mode([r.predictions() for r in reports])
    golds = reports[0].golds()
    per_instance = dict(zip(ids, zip(golds, votes)))
    folds = reports[0].folds
    ks = {len(r.per_fold_accuracy) for r in reports}
    k = ks.pop() if len(ks) == 1 and all(r.folds == folds for r in reports) else 1
    if k == 1:
        folds = {i: 0 for i in ids}
    config = {"kind": "combo", "members": [r.experiment for r in reports], "folds": k}
    return ExperimentReport(name, config, per_fold_accuracies(per_instance, folds, k), per_instance, dict(folds),
                            dict(reports[0].sources))


def _report(name, config, dataset, plan, per_instance):
    folds = {d.id: plan.assignment[d.id] for d in dataset}
    return ExperimentReport(
        name,
        config,
        per_fold_accuracies(per_instance, folds, plan.k),
        per_instance,
        folds,
        {d.id: d.source_name for d in dataset},
    )
