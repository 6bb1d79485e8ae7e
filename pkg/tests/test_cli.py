import json

import pytest
from conftest import write_corpus

from sentibench.cli import main
from sentibench.presets import LEXICON_ROWS, ML_ROWS, PRESETS

LEXICON = "\n".join(
    [
        "type=strongsubj len=1 word1=superb pos1=adj stemmed1=n priorpolarity=positive",
        "type=weaksubj len=1 word1=fine pos1=anypos stemmed1=n priorpolarity=positive",
        "type=strongsubj len=1 word1=awful pos1=adj stemmed1=n priorpolarity=negative",
        "type=weaksubj len=1 word1=dull pos1=anypos stemmed1=n priorpolarity=negative",
    ]
) + "\n"

RESULT_ROWS_LEXICON = ["no weights", "with weights", "weights + negation"]
RESULT_ROWS_ML = [
    "unigrams (uni)", "bigrams", "trigrams", "1, 2 grams", "1, 2, 3 grams", "uni+pos", "uni+uni+pos",
    "lexicon added", "adjectives", "verbs", "nouns", "adj+verb+noun", "dependencies",
]


@pytest.fixture
def lexicon_file(tmp_path):
    p = tmp_path / "lex.tff"
    p.write_text(LEXICON, encoding="utf-8")
    return p


def test_run_preset(separable_corpus, tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["run", "--corpus", str(separable_corpus), "--experiment", "unigram-nb", "--out", str(out)]) == 0
    assert "unigram-nb: mean accuracy 100.00%" in capsys.readouterr().out
    d = json.loads(out.read_text())
    assert d["experiment"] == "unigram-nb" and d["config"]["max_features"] == 10000


def test_maxent_default_feature_cap(separable_corpus, tmp_path):
    out = tmp_path / "r.json"
    assert main(["run", "--corpus", str(separable_corpus), "--experiment", "unigram-maxent", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["config"]["max_features"] == 5000


def test_run_explicit_features(separable_corpus, capsys):
    code = main(["run", "--corpus", str(separable_corpus), "--features", "unigram,bigram", "--classifier", "svm",
                 "--max-features", "20"])
    assert code == 0
    assert "bigram+unigram-svm" in capsys.readouterr().out


def test_run_is_byte_identical(separable_corpus, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        main(["run", "--corpus", str(separable_corpus), "--experiment", "uni-bigram-svm", "--out", str(p)])
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_baseline_significance(separable_corpus, tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["run", "--corpus", str(separable_corpus), "--experiment", "unigram-svm", "--baseline", "unigram-nb",
                 "--out", str(out)]) == 0
    d = json.loads(out.read_text())
    assert d["significance"][0]["against"] == "unigram-nb"


def test_score_lexicon(separable_corpus, lexicon_file, capsys):
    code = main(["score-lexicon", "--corpus", str(separable_corpus), "--lexicon", str(lexicon_file),
                 "--weights", "on", "--negation", "off"])
    assert code == 0
    assert "100.00%" in capsys.readouterr().out


def test_lexicon_preset(separable_corpus, lexicon_file):
    assert main(["run", "--corpus", str(separable_corpus), "--lexicon", str(lexicon_file),
                 "--experiment", "lexicon-weights-negation"]) == 0


def test_sweep_single_count(separable_corpus, tmp_path, capsys):
    out = tmp_path / "s.json"
    assert main(["sweep-features", "--corpus", str(separable_corpus), "--experiment", "unigram-nb",
                 "--counts", "100", "--out", str(out)]) == 0
    d = json.loads(out.read_text())
    assert d["counts"] == [100] and len(d["mean_accuracy"]) == 1 and d["pairwise"] == []


def test_sweep_pairs(separable_corpus, tmp_path):
    out = tmp_path / "s.json"
    assert main(["sweep-features", "--corpus", str(separable_corpus), "--experiment", "unigram-nb",
                 "--counts", "2,5,100", "--out", str(out)]) == 0
    assert len(json.loads(out.read_text())["pairwise"]) == 3


def test_sweep_empty_counts(separable_corpus):
    assert main(["sweep-features", "--corpus", str(separable_corpus), "--experiment", "unigram-nb",
                 "--counts", ""]) == 1


def test_combo_identity(separable_corpus, tmp_path, capsys):
    r = tmp_path / "r.json"
    main(["run", "--corpus", str(separable_corpus), "--experiment", "unigram-svm", "--out", str(r)])
    c = tmp_path / "c.json"
    assert main(["combo", str(r), "--out", str(c)]) == 0
    a, b = json.loads(r.read_text()), json.loads(c.read_text())
    assert a["mean_accuracy"] == b["mean_accuracy"]
    assert [x["predicted"] for x in a["instances"]] == [x["predicted"] for x in b["instances"]]


def test_combo_mismatched(separable_corpus, tmp_path):
    other = write_corpus(tmp_path / "o", ["good", "fine", "nice", "great"], ["bad", "poor", "dull", "awful"])
    r1, r2 = tmp_path / "1.json", tmp_path / "2.json"
    main(["run", "--corpus", str(separable_corpus), "--experiment", "unigram-nb", "--out", str(r1)])
    main(["run", "--corpus", str(other), "--experiment", "unigram-nb", "--out", str(r2)])
    assert main(["combo", str(r1), str(r2)]) == 2


def test_preset_list_matches_result_rows(capsys):
    assert [row for row, *_ in LEXICON_ROWS.values()] == RESULT_ROWS_LEXICON
    assert [row for row, _ in ML_ROWS.values()] == RESULT_ROWS_ML
    assert len(PRESETS) == 3 + 3 * 13
    # each (row, classifier) cell resolves to exactly one preset
    cells = [(p.row, p.classifier) for p in PRESETS.values()]
    assert len(set(cells)) == len(cells)
    assert main(["presets"]) == 0
    printed = capsys.readouterr().out.splitlines()
    assert [line.split()[0] for line in printed] == list(PRESETS)


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "--corpus", "{c}", "--experiment", "foo"],
        ["run", "--corpus", "{c}"],
        ["run", "--corpus", "{c}", "--experiment", "unigram-nb", "--folds", "1"],
        ["run", "--corpus", "{c}", "--experiment", "lexicon-weights"],
        ["run", "--corpus", "{c}", "--experiment", "adjectives-nb"],
        ["run", "--corpus", "{c}", "--experiment", "unigram-nb", "--svm-c", "-1"],
        ["score-lexicon", "--corpus", "{c}", "--weights", "maybe"],
        ["nonsense"],
        [],
    ],
)
def test_usage_errors(separable_corpus, argv):
    code = main([a.format(c=separable_corpus) for a in argv])
    assert code == 1


def test_data_errors(tmp_path, separable_corpus):
    assert main(["run", "--corpus", str(tmp_path / "missing"), "--experiment", "unigram-nb"]) == 2
    (tmp_path / "flat").mkdir()
    assert main(["run", "--corpus", str(tmp_path / "flat"), "--experiment", "unigram-nb"]) == 2
    bad = tmp_path / "bad.tff"
    bad.write_text("type=strongsubj len=1 word1=x\n")
    assert main(["score-lexicon", "--corpus", str(separable_corpus), "--lexicon", str(bad)]) == 2
    assert main(["combo", str(tmp_path / "nope.json")]) == 2


def test_training_error(separable_corpus, capsys):
    # an enormous step threshold rejects every SMO update, leaving KKT violations
    code = main(["run", "--corpus", str(separable_corpus), "--experiment", "unigram-svm", "--svm-eps", "1e6"])
    assert code == 3
    assert "fold 0" in capsys.readouterr().err
