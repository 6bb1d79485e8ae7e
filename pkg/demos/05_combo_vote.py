"""
Mode vote over saved reports with the command-line tool
=======================================================
"""

import json
import tempfile
from pathlib import Path

import numpy as np

from sentibench.cli import main

rng = np.random.default_rng(2)
root = Path(tempfile.mkdtemp())
for label, lean in (("pos", range(0, 14)), ("neg", range(6, 20))):
    (root / "corpus" / label).mkdir(parents=True)
    for i in range(30):
        words = " ".join(f"w{int(v)}" for v in rng.choice(list(lean), size=6))
        (root / "corpus" / label / f"{i:02d}.txt").write_text(words, encoding="utf-8")

# Each run writes a JSON report with one row per document.
reports = []
for preset in ("unigram-nb", "unigram-svm", "uni-bigram-maxent"):
    out = root / f"{preset}.json"
    main(["run", "--corpus", str(root / "corpus"), "--experiment", preset, "--max-features", "50", "--out", str(out)])
    reports.append(str(out))

# The combo takes the majority label per document; ties go negative.
main(["combo", *reports, "--out", str(root / "combo.json")])
combo = json.loads((root / "combo.json").read_text())
print("members", combo["config"]["members"])
print("first rows", combo["instances"][:2])
