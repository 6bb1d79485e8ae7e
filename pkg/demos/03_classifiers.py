"""
Three classifiers on binary presence vectors
============================================
"""

import numpy as np
import scipy.sparse as sp

from sentibench.classifiers import TrainConfig, dumps_model, loads_model, predict_labels, train
from sentibench.classifiers.maxent import maxent_fit
from sentibench.classifiers.smo import svm_fit

rng = np.random.default_rng(0)

# 200 documents over 40 features; the first five features lean positive.
n, d = 200, 40
y = np.repeat([0, 1], n // 2)
p_on = np.full((n, d), 0.15)
p_on[y == 1, :5] = 0.45
X = sp.csr_matrix((rng.random((n, d)) < p_on).astype(float))

for name in ("nb", "maxent", "svm"):
    model = train(name, X, y, TrainConfig())
    acc = np.mean(predict_labels(model, X) == y)
    print(f"{name:7s} training accuracy {acc:.3f}")

# MaxEnt reports its ascent: the objective never decreases.
_, trace = maxent_fit(X, y, TrainConfig(maxent_l2=0.1))
print("maxent iterations", len(trace.objective), "converged", trace.converged,
      "final gradient max-norm %.1e" % trace.grad_norm[-1])

# SMO keeps the dual history and the multipliers.
svm, sol = svm_fit(X, y, TrainConfig(svm_C=1.0))
print("support vectors", int((sol.alpha > 0).sum()), "of", n, "| full passes", sol.full_passes)
print("largest weights on features", np.argsort(-svm.w)[:5])

# Models serialize to versioned JSON and round-trip exactly.
print(loads_model(dumps_model(svm)) == svm)
