import cvxpy as cp
import numpy as np
import pytest
import scipy.sparse as sp

from sentibench.classifiers import LinearModel, TrainConfig, dumps_model, loads_model, smo_solve, svm_fit, svm_predict
from sentibench.classifiers.smo import dual_objective
from sentibench.corpus import Polarity
from sentibench.errors import DimensionError, TrainingError
from sentibench.features import FeatureVector


def independent_kkt(alpha, y, X, w, b, C, tol):
    """KKT check from the primal side: margins from w, not from the kernel."""
    m = y * (X @ w + b)
    bad = 0
    for a, mi in zip(alpha, m):
        if a <= 0 and mi < 1 - tol:
            bad += 1
        elif a >= C and mi > 1 + tol:
            bad += 1
        elif 0 < a < C and abs(mi - 1) > tol:
            bad += 1
    return bad


def qp_dual_optimum(K, y, C):
    n = len(y)
    a = cp.Variable(n)
    Q = (y[:, None] * y[None, :]) * K + 1e-9 * np.eye(n)
    prob = cp.Problem(cp.Maximize(cp.sum(a) - 0.5 * cp.quad_form(a, cp.psd_wrap(Q))), [a >= 0, a <= C, y @ a == 0])
    prob.solve(solver=cp.CLARABEL)
    return prob.value


def random_problem(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(6, 30))
    d = int(rng.integers(2, 8))
    X = rng.normal(size=(n, d))
    y = np.where(X @ rng.normal(size=d) + rng.normal(scale=0.8, size=n) > 0, 1.0, -1.0)
    y[0], y[1] = 1.0, -1.0
    C = float(rng.choice([0.1, 1.0, 10.0]))
    return X, y, C


def test_two_point_analytic():
    X = np.array([[1.0], [-1.0]])
    model, sol = svm_fit(X, np.array([1, 0]), TrainConfig(svm_C=1e6))
    assert model.w[0] == pytest.approx(1.0, abs=1e-6)
    assert model.b == pytest.approx(0.0, abs=1e-6)
    np.testing.assert_allclose(sol.alpha, [0.5, 0.5], atol=1e-9)


def test_two_point_flipped_labels_negates_w():
    X = np.array([[1.0], [-1.0]])
    a, _ = svm_fit(X, np.array([1, 0]), TrainConfig(svm_C=1e6))
    b, _ = svm_fit(X, np.array([0, 1]), TrainConfig(svm_C=1e6))
    np.testing.assert_allclose(b.w, -a.w, atol=1e-9)
    assert b.b == pytest.approx(-a.b, abs=1e-9)


@pytest.mark.parametrize("seed", range(20))
def test_random_problems_kkt_box_equality(seed):
    X, y, C = random_problem(seed)
    tol = 1e-3
    K = X @ X.T
    sol = smo_solve(K, y, C, tol)
    alpha = sol.alpha
    assert np.all(alpha >= 0) and np.all(alpha <= C)
    assert abs(alpha @ y) <= 1e-8
    w = X.T @ (alpha * y)
    assert independent_kkt(alpha, y, X, w, sol.b, C, tol) == 0
    hist = sol.dual_history
    assert all(b >= a - 1e-12 for a, b in zip(hist, hist[1:]))
    assert dual_objective(alpha, y, K) == pytest.approx(qp_dual_optimum(K, y, C), rel=2e-3, abs=2e-3)


def test_degenerate_eta_duplicate_points():
    # identical inputs with opposite labels make eta = 0 for that pair
    X = np.array([[1.0, 0.0], [1.0, 0.0], [0.0, 1.0], [-1.0, -1.0]])
    y = np.array([1.0, -1.0, 1.0, -1.0])
    sol = smo_solve(X @ X.T, y, C=1.0)
    w = X.T @ (sol.alpha * y)
    assert independent_kkt(sol.alpha, y, X, w, sol.b, 1.0, 1e-3) == 0
    assert abs(sol.alpha @ y) <= 1e-8


def test_sparse_input_matches_dense():
    X, y, C = random_problem(4)
    X = np.abs(X) > 0.7
    y01 = (y > 0).astype(int)
    dense, _ = svm_fit(X.astype(float), y01, TrainConfig(svm_C=C))
    sparse, _ = svm_fit(sp.csr_matrix(X.astype(float)), y01, TrainConfig(svm_C=C))
    np.testing.assert_allclose(sparse.w, dense.w, atol=1e-12)


def test_predict():
    m = LinearModel(np.array([1.0]), 0.0, "svm")
    assert svm_predict(m, FeatureVector(0, (0,))) == (Polarity.POSITIVE, 1.0)
    m = LinearModel(np.array([1.0]), -0.25, "svm")
    assert svm_predict(m, FeatureVector(0, ())) == (Polarity.NEGATIVE, -0.25)
    assert svm_predict(LinearModel(np.zeros(1), 0.0, "svm"), FeatureVector(0, ()))[0] is Polarity.NEGATIVE
    with pytest.raises(DimensionError):
        svm_predict(m, FeatureVector(0, (1,)))


def test_margin_equals_dot_product(rng):
    w = rng.normal(size=40)
    b = float(rng.normal())
    m = LinearModel(w, b, "svm")
    for _ in range(20):
        on = tuple(sorted(rng.choice(40, size=int(rng.integers(0, 40)), replace=False).tolist()))
        x = np.zeros(40)
        x[list(on)] = 1
        assert svm_predict(m, FeatureVector(0, on))[1] == pytest.approx(float(np.dot(w, x) + b), abs=1e-12)


def test_single_class():
    with pytest.raises(TrainingError):
        smo_solve(np.eye(2), np.array([1.0, 1.0]))


def test_deterministic_and_serializable():
    X, y, C = random_problem(11)
    a, _ = svm_fit(X, (y > 0).astype(int), TrainConfig(svm_C=C))
    b, _ = svm_fit(X, (y > 0).astype(int), TrainConfig(svm_C=C))
    assert a == b
    assert loads_model(dumps_model(a)) == a
