"""Linear soft-margin SVM trained with Platt's sequential minimal optimization.

The dual

    maximize  sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij
    s.t.      0 <= alpha_i <= C,  sum_i alpha_i y_i = 0

is solved two multipliers at a time. Pair selection follows Platt's
heuristics, made deterministic: where Platt starts a scan at a random
position, the scan here starts just after the first-choice example and
wraps around.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..corpus import Polarity
from ..errors import ConvergenceError, TrainingError
from .config import TrainConfig
from .linear import SVM, LinearModel

# Convention: f(x) = sum_j alpha_j y_j K(x_j, x) + b ;  E_i = f(x_i) - y_i


def dual_objective(alpha, y, K):
    v = alpha * y
    return float(alpha.sum() - 0.5 * v @ K @ v)


def kkt_violations(alpha, y, K, b, C, tol):
    """Indices breaking the KKT conditions by more than ``tol``."""
    f = K @ (alpha * y) + b
    r = y * f - 1.0
    bad = ((alpha < C) & (r < -tol)) | ((alpha > 0) & (r > tol))
    return np.flatnonzero(bad)


@dataclass
class SMOSolution:
    alpha: np.ndarray
    b: float
    dual_history: list = field(default_factory=list)
    full_passes: int = 0
    steps: int = 0


class _Solver:
    def __init__(self, K, y, C, tol, eps):
        self.K = K
        self.y = y
        self.C = C
        self.tol = tol
        self.eps = eps
        n = len(y)
        self.alpha = np.zeros(n)
        self.b = 0.0
        self.E = -y.astype(np.float64)  # f = 0 everywhere at alpha = 0, b = 0
        self.nonbound = np.zeros(n, dtype=bool)
        self.steps = 0

    def take_step(self, i1, i2):
        if i1 == i2:
            return False
        alpha, y, K, C = self.alpha, self.y, self.K, self.C
        a1, a2 = alpha[i1], alpha[i2]
        y1, y2 = y[i1], y[i2]
        E1, E2 = self.E[i1], self.E[i2]
        s = y1 * y2
        if y1 != y2:
            L, H = max(0.0, a2 - a1), min(C, C + a2 - a1)
        else:
            L, H = max(0.0, a1 + a2 - C), min(C, a1 + a2)
        if H - L <= 0:
            return False
        k11, k12, k22 = K[i1, i1], K[i1, i2], K[i2, i2]
        eta = k11 + k22 - 2.0 * k12
        if eta > 0:
            a2n = a2 + y2 * (E1 - E2) / eta
            a2n = min(max(a2n, L), H)
        else:
            # Objective along the constraint line is linear (or concave
            # degenerate); evaluate it at both ends.
            f1 = y1 * E1 - a1 * k11 - s * a2 * k12
            f2 = y2 * E2 - s * a1 * k12 - a2 * k22
            L1 = a1 + s * (a2 - L)
            H1 = a1 + s * (a2 - H)
            Lobj = -(L1 * f1 + L * f2 + 0.5 * L1 * L1 * k11 + 0.5 * L * L * k22 + s * L * L1 * k12)
            Hobj = -(H1 * f1 + H * f2 + 0.5 * H1 * H1 * k11 + 0.5 * H * H * k22 + s * H * H1 * k12)
            if Lobj > Hobj + self.eps:
                a2n = L
            elif Lobj < Hobj - self.eps:
                a2n = H
            else:
                a2n = a2
        if abs(a2n - a2) < self.eps * (a2n + a2 + self.eps):
            return False
        a1n = a1 + s * (a2 - a2n)
        # Keep a1 inside the box without breaking sum(alpha * y).
        if a1n < 0:
            a2n += s * a1n
            a1n = 0.0
        elif a1n > C:
            a2n += s * (a1n - C)
            a1n = C
        # Snap rounding residue onto the bounds so bound status is exact.
        snap = 1e-12 * C
        a1n, a2n = (0.0 if a < snap else C if a > C - snap else a for a in (a1n, a2n))
        d1 = y1 * (a1n - a1)
        d2 = y2 * (a2n - a2)
        b1 = self.b - E1 - d1 * k11 - d2 * k12
        b2 = self.b - E2 - d1 * k12 - d2 * k22
        if 0 < a1n < C:
            bn = b1
        elif 0 < a2n < C:
            bn = b2
        else:
            bn = 0.5 * (b1 + b2)
        self.E += d1 * K[i1] + d2 * K[i2] + (bn - self.b)
        self.b = bn
        alpha[i1], alpha[i2] = a1n, a2n
        self.nonbound[i1] = 0 < a1n < C
        self.nonbound[i2] = 0 < a2n < C
        self.steps += 1
        return True

    def examine(self, i2):
        y2, a2, E2 = self.y[i2], self.alpha[i2], self.E[i2]
        r2 = E2 * y2
        if not ((r2 < -self.tol and a2 < self.C) or (r2 > self.tol and a2 > 0)):
            return False
        n = len(self.y)
        nb = np.flatnonzero(self.nonbound)
        if len(nb) > 1:
            i1 = nb[np.argmax(np.abs(self.E[nb] - E2))]
            if self.take_step(int(i1), i2):
                return True
        if len(nb):
            for i1 in np.roll(nb, -int(np.searchsorted(nb, i2, side="right"))):
                if self.take_step(int(i1), i2):
                    return True
        for i1 in range(i2 + 1, i2 + 1 + n):
            if self.take_step(i1 % n, i2):
                return True
        return False


def smo_solve(K, y, C=1.0, tol=1e-3, eps=1e-12, max_passes=10) -> SMOSolution:
    """Solve the SVM dual for kernel matrix ``K`` and labels ``y`` in {-1, +1}."""
    K = np.asarray(K, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if not ((y == 1).any() and (y == -1).any()):
        raise TrainingError("SVM training needs both classes")
    solver = _Solver(K, y, C, tol, eps)
    sol = SMOSolution(solver.alpha, 0.0)
    last_dual = dual_objective(solver.alpha, y, K)
    sol.dual_history.append(last_dual)
    stale = 0
    examine_all = True
    changed = 0
    while changed > 0 or examine_all:
        changed = 0
        if examine_all:
            for i in range(len(y)):
                changed += solver.examine(i)
        else:
            for i in np.flatnonzero(solver.nonbound):
                changed += solver.examine(int(i))
        dual = dual_objective(solver.alpha, y, K)
        sol.dual_history.append(dual)
        if examine_all:
            sol.full_passes += 1
            if changed == 0:
                break
            if dual - last_dual <= eps * max(1.0, abs(dual)):
                stale += 1
                if stale >= max_passes:
                    n_bad = len(kkt_violations(solver.alpha, y, K, solver.b, C, tol))
                    raise ConvergenceError(
                        f"SMO made no progress in {stale} full passes; {n_bad} KKT violations remain", n_bad
                    )
            else:
                stale = 0
            last_dual = dual
            examine_all = False
        elif changed == 0:
            examine_all = True
    sol.b = solver.b
    sol.steps = solver.steps
    bad = kkt_violations(solver.alpha, y, K, solver.b, C, tol)
    if len(bad):
        raise ConvergenceError(f"SMO stopped with {len(bad)} KKT violations", len(bad))
    return sol


def svm_fit(X, y, cfg: TrainConfig = TrainConfig()) -> tuple[LinearModel, SMOSolution]:
    """``y`` in {1, 0}; mapped to {+1, -1} for the dual."""
    ypm = np.where(np.asarray(y) == 1, 1.0, -1.0)
    K = X @ X.T
    K = K.toarray() if hasattr(K, "toarray") else np.asarray(K)
    sol = smo_solve(K, ypm, cfg.svm_C, cfg.svm_tol, cfg.svm_eps, cfg.svm_max_passes)
    w = np.asarray(X.T @ (sol.alpha * ypm)).ravel()
    return LinearModel(w, sol.b, SVM), sol


def svm_train(X, y, cfg: TrainConfig = TrainConfig()) -> LinearModel:
    return svm_fit(X, y, cfg)[0]


def svm_predict(model: LinearModel, vector) -> tuple[Polarity, float]:
    margin = model.score(vector)
    return (Polarity.POSITIVE if margin > 0 else Polarity.NEGATIVE), margin
