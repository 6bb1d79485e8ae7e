"""Command-line entry point.

Exit codes: 0 success, 1 usage/config error, 2 data error, 3 training or
convergence error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .classifiers import TrainConfig
from .errors import DataError, SentibenchError, UsageError
from .lexicon import ScoreConfig
from .presets import PRESETS
from .runner import ExperimentConfig, Workspace, combo, run_in, sweep_in


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _on_off(value):
    if value not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected 'on' or 'off'")
    return value == "on"


def _counts(value):
    try:
        return [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers") from None


def _add_data_args(p, need_experiment=True):
    p.add_argument("--corpus", required=True, help="directory with pos/ and neg/ review files")
    p.add_argument("--lexicon", help="subjectivity lexicon file")
    p.add_argument("--annotations", help="directory of <stem>.dep annotation files")
    if need_experiment:
        p.add_argument("--experiment", help="preset name (see 'sentibench presets')")
        p.add_argument("--features", help="explicit comma-separated feature families, e.g. unigram,bigram")
        p.add_argument("--classifier", choices=("nb", "maxent", "svm"))
        p.add_argument("--max-features", type=int)
    p.add_argument("--folds", type=int, default=3)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", help="write the JSON report here")
    d = TrainConfig()
    g = p.add_argument_group("hyperparameters")
    g.add_argument("--nb-smoothing", type=float, default=d.nb_smoothing)
    g.add_argument("--maxent-l2", type=float, default=d.maxent_l2)
    g.add_argument("--maxent-tol", type=float, default=d.maxent_tol)
    g.add_argument("--maxent-max-iters", type=int, default=d.maxent_max_iters)
    g.add_argument("--svm-c", type=float, default=d.svm_C)
    g.add_argument("--svm-tol", type=float, default=d.svm_tol)
    g.add_argument("--svm-eps", type=float, default=d.svm_eps)
    g.add_argument("--svm-max-passes", type=int, default=d.svm_max_passes)


def build_parser():
    parser = _Parser(prog="sentibench", description="Lexicon and bag-of-words sentiment experiments.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("run", help="run one experiment with k-fold cross-validation")
    _add_data_args(p)
    p.add_argument("--baseline", help="also run this preset and report significance against it")

    p = sub.add_parser("sweep-features", help="rerun one experiment at several vocabulary sizes")
    _add_data_args(p)
    p.add_argument("--counts", type=_counts, default=[5000, 10000, 20000])

    p = sub.add_parser("combo", help="mode vote over saved per-instance predictions")
    p.add_argument("reports", nargs="*")
    p.add_argument("--out")

    p = sub.add_parser("score-lexicon", help="lexicon-only classification")
    _add_data_args(p, need_experiment=False)
    p.add_argument("--weights", type=_on_off, default=True)
    p.add_argument("--negation", type=_on_off, default=False)

    sub.add_parser("presets", help="list experiment presets")
    return parser


def _train_cfg(args):
    return TrainConfig(
        nb_smoothing=args.nb_smoothing,
        maxent_l2=args.maxent_l2,
        maxent_tol=args.maxent_tol,
        maxent_max_iters=args.maxent_max_iters,
        svm_C=args.svm_c,
        svm_tol=args.svm_tol,
        svm_eps=args.svm_eps,
        svm_max_passes=args.svm_max_passes,
    )


def _config(args, **overrides):
    if args.folds < 2:
        raise UsageError("--folds must be at least 2")
    kw = dict(
        corpus_path=args.corpus,
        lexicon_path=args.lexicon,
        annotations_path=args.annotations,
        experiment=getattr(args, "experiment", None),
        families=[f for f in (getattr(args, "features", None) or "").split(",") if f],
        classifier=getattr(args, "classifier", None),
        max_features=getattr(args, "max_features", None),
        k=args.folds,
        seed=args.seed,
        train_cfg=_train_cfg(args),
    )
    kw.update(overrides)
    return ExperimentConfig(**kw)


def _workspace(args):
    for flag in ("corpus", "lexicon", "annotations"):
        value = getattr(args, flag, None)
        if value and not Path(value).exists():
            raise DataError(f"--{flag} path {value} does not exist")
    return Workspace(args.corpus, args.lexicon, args.annotations)


def _emit(text, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
        if args.command == "presets":
            for name, p in PRESETS.items():
                print(f"{name:32s} {p.group:8s} {p.row}")
            return 0
        if args.command == "combo":
            report = combo(args.reports)
            _emit(report.to_json(), args.out)
            print(report.summary())
            return 0
        ws = _workspace(args)
        if args.command == "run":
            config = _config(args)
            report = run_in(ws, config)
            if args.baseline:
                report.add_significance(run_in(ws, _config(args, experiment=args.baseline)))
            _emit(report.to_json(), args.out)
            print(report.summary())
        elif args.command == "score-lexicon":
            config = _config(args, score_cfg=ScoreConfig.preset(args.weights, args.negation))
            report = run_in(ws, config)
            _emit(report.to_json(), args.out)
            print(report.summary())
        elif args.command == "sweep-features":
            result = sweep_in(ws, _config(args), args.counts)
            reports = result.pop("reports")
            for r in reports:
                print(r.summary())
            for block in result["pairwise"]:
                print(f"  {block['a']} vs {block['against']}: per-fold p={block['per_fold']['p_two_sided']:.4g}, "
                      f"per-instance p={block['per_instance']['p_two_sided']:.4g}")
            _emit(json.dumps(result, indent=1, sort_keys=True) + "\n", args.out)
        return 0
    except SentibenchError as exc:
        print(f"sentibench: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"sentibench: error: {exc}", file=sys.stderr)
        return DataError.exit_code


if __name__ == "__main__":
    sys.exit(main())
