"""Wilcoxon signed-rank test for paired samples."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np
from scipy.stats import rankdata

from ..errors import InputError

EXACT_MAX_N = 25


@dataclass(frozen=True)
class WilcoxonResult:
    n_effective: int
    W: float
    p_two_sided: float
    method: str  # "exact" or "normal"

    def to_dict(self):
        return asdict(self)


def signed_ranks(a: Sequence[float], b: Sequence[float]):
    """Average ranks of nonzero ``|a - b|`` and the signs of those differences."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1:
        raise InputError(f"paired samples must have equal length, got {a.shape} and {b.shape}")
    if a.size == 0:
        raise InputError("paired samples must be nonempty")
    d = a - b
    d = d[d != 0]
    return rankdata(np.abs(d)), np.sign(d)


def exact_null_counts(doubled_ranks: Sequence[int]) -> np.ndarray:
    """Number of sign assignments giving each doubled positive-rank sum.

    Equivalent to enumerating all ``2**n`` assignments, computed by
    convolution so that n = 25 stays cheap.
    """
    total = int(sum(doubled_ranks))
    counts = np.zeros(total + 1, dtype=np.int64)
    counts[0] = 1
    for r in doubled_ranks:
        r = int(r)
        shifted = np.zeros_like(counts)
        shifted[r:] = counts[: total + 1 - r]
        counts = counts + shifted
    return counts


def wilcoxon_signed_rank(a: Sequence[float], b: Sequence[float]) -> WilcoxonResult:
    """Two-sided test of ``a`` versus ``b`` (zero differences are dropped).

    ``W`` is the sum of ranks of the positive differences. For at most 25
    nonzero differences the p-value is exact,
    ``P(|W' - mu| >= |W - mu|)`` under random signs; above that a normal
    approximation with tie-corrected variance and continuity correction
    is used.
    """
    ranks, signs = signed_ranks(a, b)
    n = len(ranks)
    if n == 0:
        return WilcoxonResult(0, 0.0, 1.0, "exact")
    W = float(ranks[signs > 0].sum())
    if n <= EXACT_MAX_N:
        doubled = np.rint(2 * ranks).astype(np.int64)
        counts = exact_null_counts(doubled)
        total = int(doubled.sum())
        w2 = int(round(2 * W))
        sums = np.arange(total + 1)
        extreme = np.abs(2 * sums - total) >= abs(2 * w2 - total)
        p = float(counts[extreme].sum()) / float(2**n)
        return WilcoxonResult(n, W, min(1.0, p), "exact")
    mu = n * (n + 1) / 4.0
    _, tie_sizes = np.unique(ranks, return_counts=True)
    var = n * (n + 1) * (2 * n + 1) / 24.0 - float(np.sum(tie_sizes**3 - tie_sizes)) / 48.0
    if var <= 0:
        return WilcoxonResult(n, W, 1.0, "normal")
    z = max(0.0, abs(W - mu) - 0.5) / math.sqrt(var)
    p = math.erfc(z / math.sqrt(2.0))
    return WilcoxonResult(n, W, min(1.0, p), "normal")
