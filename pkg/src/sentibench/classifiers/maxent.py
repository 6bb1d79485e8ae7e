"""Two-class maximum entropy (logistic) classifier.

With two classes the conditional exponential model reduces to
``p(pos | d) = logistic(w.x + b)``. Training maximizes the L2-penalized
conditional log-likelihood

    sum_i log p(y_i | x_i)  -  (l2 / 2) * ||w||^2

(the bias is not penalized) with a truncated Newton method: conjugate
gradient on the exact Hessian-vector product, followed by a backtracking
line search that only accepts steps which raise the objective.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import expit, log_expit

from ..corpus import Polarity
from ..errors import TrainingError
from .config import TrainConfig
from .linear import MAXENT, LinearModel


def objective(theta, X, y, l2):
    """Penalized log-likelihood and its gradient; ``theta = [w..., b]``."""
    w, b = theta[:-1], theta[-1]
    z = np.asarray(X @ w).ravel() + b
    # log p(y|x) = y*log s(z) + (1-y)*log s(-z)
    ll = float(np.sum(y * log_expit(z) + (1 - y) * log_expit(-z)))
    f = ll - 0.5 * l2 * float(w @ w)
    resid = y - expit(z)
    grad = np.empty_like(theta)
    grad[:-1] = np.asarray(X.T @ resid).ravel() - l2 * w
    grad[-1] = resid.sum()
    return f, grad


def _hessian_product(X, s, l2):
    """Return v -> (-Hessian) v, the positive definite curvature operator."""

    def hv(v):
        vw, vb = v[:-1], v[-1]
        t = s * (np.asarray(X @ vw).ravel() + vb)
        out = np.empty_like(v)
        out[:-1] = np.asarray(X.T @ t).ravel() + l2 * vw
        out[-1] = t.sum()
        return out

    return hv


def _conjugate_gradient(hv, g, tol, max_iter):
    x = np.zeros_like(g)
    r = g.copy()
    p = r.copy()
    rr = r @ r
    stop = (tol * np.sqrt(rr)) ** 2
    for _ in range(max_iter):
        if rr <= stop:
            break
        hp = hv(p)
        curv = p @ hp
        if curv <= 0:
            break
        a = rr / curv
        x += a * p
        r -= a * hp
        rr_new = r @ r
        p = r + (rr_new / rr) * p
        rr = rr_new
    if not x.any():
        x = g.copy()
    return x


@dataclass
class MaxEntTrace:
    objective: list = field(default_factory=list)
    grad_norm: list = field(default_factory=list)
    converged: bool = False


def maxent_fit(X, y, cfg: TrainConfig = TrainConfig()) -> tuple[LinearModel, MaxEntTrace]:
    y = np.asarray(y, dtype=np.float64)
    if not ((y == 1).any() and (y == 0).any()):
        raise TrainingError("maximum entropy training needs both classes")
    dim = X.shape[1]
    theta = np.zeros(dim + 1)
    l2 = cfg.maxent_l2
    trace = MaxEntTrace()
    f, g = objective(theta, X, y, l2)
    for _ in range(cfg.maxent_max_iters):
        if not np.isfinite(f):
            raise TrainingError("maximum entropy objective became non-finite")
        gmax = float(np.abs(g).max())
        trace.objective.append(f)
        trace.grad_norm.append(gmax)
        if gmax < cfg.maxent_tol:
            trace.converged = True
            break
        s = expit(np.asarray(X @ theta[:-1]).ravel() + theta[-1])
        s = s * (1 - s)
        gnorm = float(np.linalg.norm(g))
        step = _conjugate_gradient(_hessian_product(X, s, l2), g, min(0.5, np.sqrt(gnorm)), 2 * (dim + 1))
        slope = float(g @ step)
        t = 1.0
        while True:
            cand = theta + t * step
            f_new, g_new = objective(cand, X, y, l2)
            if np.isfinite(f_new) and f_new >= f + 1e-4 * t * slope:
                break
            t *= 0.5
            if t < 1e-12:
                break
        if not (np.isfinite(f_new) and f_new >= f):
            # No ascent possible at floating point resolution.
            break
        theta, f, g = cand, f_new, g_new
    else:
        trace.objective.append(f)
        trace.grad_norm.append(float(np.abs(g).max()))
        trace.converged = trace.grad_norm[-1] < cfg.maxent_tol
    return LinearModel(theta[:-1].copy(), theta[-1], MAXENT), trace


def maxent_train(X, y, cfg: TrainConfig = TrainConfig()) -> LinearModel:
    return maxent_fit(X, y, cfg)[0]


def predict_proba(model: LinearModel, vector) -> float:
    return float(expit(model.score(vector)))


def maxent_predict(model: LinearModel, vector) -> tuple[Polarity, float]:
    p = predict_proba(model, vector)
    return (Polarity.POSITIVE if p > 0.5 else Polarity.NEGATIVE), p
