"""Cross-validation, significance testing and ensembling."""

from .crossval import combo_report, cross_validate, evaluate_lexicon
from .ensemble import ensemble_mode
from .folds import FoldPlan, SplitMix64, make_folds
from .report import ExperimentReport, accuracy, compare
from .wilcoxon import WilcoxonResult, wilcoxon_signed_rank

__all__ = [
    "ExperimentReport",
    "FoldPlan",
    "SplitMix64",
    "WilcoxonResult",
    "accuracy",
    "combo_report",
    "compare",
    "cross_validate",
    "ensemble_mode",
    "evaluate_lexicon",
    "make_folds",
    "wilcoxon_signed_rank",
]
