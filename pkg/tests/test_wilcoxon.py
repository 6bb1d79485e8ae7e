import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sentibench.errors import InputError
from sentibench.evaluation import wilcoxon_signed_rank
from sentibench.evaluation.wilcoxon import EXACT_MAX_N


def brute_force_p(a, b):
    """Enumerate every sign pattern over the nonzero differences."""
    d = [x - y for x, y in zip(a, b) if x != y]
    absd = [abs(x) for x in d]
    # average ranks by hand
    order = sorted(range(len(d)), key=lambda i: absd[i])
    ranks = [0.0] * len(d)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and absd[order[j + 1]] == absd[order[i]]:
            j += 1
        for t in range(i, j + 1):
            ranks[order[t]] = (i + j) / 2 + 1
        i = j + 1
    n = len(d)
    mu = n * (n + 1) / 4
    W = sum(r for r, x in zip(ranks, d) if x > 0)
    hits = 0
    for signs in itertools.product((0, 1), repeat=n):
        w = sum(r for r, s in zip(ranks, signs) if s)
        if abs(w - mu) >= abs(W - mu) - 1e-9:
            hits += 1
    return W, hits / 2**n


def test_identical_samples():
    r = wilcoxon_signed_rank([1, 2, 3], [1, 2, 3])
    assert (r.n_effective, r.W, r.p_two_sided) == (0, 0.0, 1.0)


def test_five_all_positive():
    r = wilcoxon_signed_rank([2, 3, 4, 5, 6], [1, 1, 1, 1, 1])
    assert r.W == 15 and r.n_effective == 5 and r.method == "exact"
    assert r.p_two_sided == 1 / 16


def test_zero_differences_dropped():
    r = wilcoxon_signed_rank([1, 5, 3, 9], [1, 4, 3, 7])
    assert r.n_effective == 2 and r.W == 3


def test_brute_force_oracle():
    rng = np.random.default_rng(99)
    for _ in range(100):
        n = int(rng.integers(1, 13))
        # small integer values produce ties and zeros
        a = rng.integers(0, 5, size=n).astype(float)
        b = rng.integers(0, 5, size=n).astype(float)
        r = wilcoxon_signed_rank(a, b)
        if r.n_effective == 0:
            continue
        W, p = brute_force_p(a, b)
        assert r.W == pytest.approx(W, abs=1e-12)
        assert r.p_two_sided == pytest.approx(p, abs=1e-12)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=1, max_size=30))
def test_swap_symmetry(pairs):
    a = [x for x, _ in pairs]
    b = [y for _, y in pairs]
    ab, ba = wilcoxon_signed_rank(a, b), wilcoxon_signed_rank(b, a)
    n = ab.n_effective
    assert ab.W + ba.W == pytest.approx(n * (n + 1) / 2)
    assert ab.p_two_sided == pytest.approx(ba.p_two_sided, abs=1e-12)
    assert 0 <= ab.p_two_sided <= 1


def test_exact_and_normal_agree_near_switch(monkeypatch):
    import sentibench.evaluation.wilcoxon as wmod

    rng = np.random.default_rng(5)
    for n in range(20, EXACT_MAX_N + 1):
        a = rng.normal(size=n) + 0.3
        b = rng.normal(size=n)
        exact = wilcoxon_signed_rank(a, b)
        monkeypatch.setattr(wmod, "EXACT_MAX_N", 0)
        normal = wmod.wilcoxon_signed_rank(a, b)
        monkeypatch.setattr(wmod, "EXACT_MAX_N", EXACT_MAX_N)
        assert exact.method == "exact" and normal.method == "normal"
        assert abs(exact.p_two_sided - normal.p_two_sided) <= 0.02


def test_normal_branch_formula():
    n = 40
    a = np.arange(1, n + 1, dtype=float)
    b = np.zeros(n)
    b[:10] = 2 * a[:10]  # ten negative differences
    r = wilcoxon_signed_rank(a, b)
    assert r.method == "normal"
    W = sum(range(11, 41))
    mu, sd = n * (n + 1) / 4, math.sqrt(n * (n + 1) * (2 * n + 1) / 24)
    assert r.W == W
    assert r.p_two_sided == pytest.approx(math.erfc((abs(W - mu) - 0.5) / sd / math.sqrt(2)), rel=1e-12)


def test_p_monotone_in_distance_from_centre():
    n = 10
    base = np.arange(1, n + 1, dtype=float)
    ps = []
    for flips in range(0, n + 1):
        d = base.copy()
        d[:flips] *= -1  # flip the smallest ranks -> W decreases toward the centre
        ps.append(wilcoxon_signed_rank(d, np.zeros(n)).p_two_sided)
    centre = n * (n + 1) / 4
    Ws = [n * (n + 1) / 2 - sum(range(1, f + 1)) for f in range(n + 1)]
    dist = [abs(w - centre) for w in Ws]
    for i in range(len(ps)):
        for j in range(len(ps)):
            if dist[i] > dist[j]:
                assert ps[i] <= ps[j]


def test_large_n_exact_fast():
    r = wilcoxon_signed_rank(np.arange(1, 26, dtype=float), np.zeros(25))
    assert r.method == "exact" and r.p_two_sided == 2 / 2**25


@pytest.mark.parametrize("a,b", [([1, 2], [1]), ([], [])])
def test_input_errors(a, b):
    with pytest.raises(InputError):
        wilcoxon_signed_rank(a, b)
