"""Independent reference implementations used as test oracles.

Everything here is deliberately naive and kept separate from the package
so the code under test never shares a path with its oracle.
"""

import math

import numpy as np


def finite_difference_grads(fn, leaves, h=1e-4):
    """Central-difference gradients of scalar fn() w.r.t. each leaf array.

    fn must recompute the forward pass from the current leaf contents.
    """
    grads = []
    for leaf in leaves:
        g = np.zeros_like(leaf)
        flat = leaf.reshape(-1)
        gflat = g.reshape(-1)
        for i in range(flat.size):
            orig = flat[i]
            flat[i] = orig + h
            up = fn()
            flat[i] = orig - h
            down = fn()
            flat[i] = orig
            gflat[i] = (up - down) / (2.0 * h)
        grads.append(g)
    return grads


def max_relative_error(analytic, numeric):
    analytic = np.asarray(analytic, dtype=float)
    numeric = np.asarray(numeric, dtype=float)
    scale = np.maximum(1.0, np.maximum(np.abs(analytic), np.abs(numeric)))
    return float(np.max(np.abs(analytic - numeric) / scale))


def naive_dtw(a, b):
    """Full-table DTW with euclidean frame cost, plain python loops.

    Arithmetic order matches an elementwise sequential sum so results can
    be compared exactly against a compiled implementation.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim == 1:
        a = a[:, None]
    if b.ndim == 1:
        b = b[:, None]
    n, m = a.shape[0], b.shape[0]
    inf = float("inf")
    table = [[inf] * (m + 1) for _ in range(n + 1)]
    table[0][0] = 0.0
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            s = 0.0
            for k in range(a.shape[1]):
                d = a[i - 1, k] - b[j - 1, k]
                s += d * d
            cost = math.sqrt(s)
            table[i][j] = cost + min(table[i - 1][j], table[i][j - 1],
                                     table[i - 1][j - 1])
    return table[n][m]


def brute_force_nearest(query, candidates, ids, dist_fn):
    """Exhaustive argmin with ties broken by lowest id."""
    best = None
    for frames, sample_id in zip(candidates, ids):
        d = dist_fn(query, frames)
        key = (d, sample_id)
        if best is None or key < best[0]:
            best = (key, sample_id)
    return best[1]


def adam_first_step(g, lr=0.001, b1=0.9, b2=0.999, eps=1e-8):
    """Closed-form first Adam update for a constant gradient g."""
    m_hat = (1 - b1) * g / (1 - b1)
    v_hat = (1 - b2) * g * g / (1 - b2)
    return -lr * m_hat / (math.sqrt(v_hat) + eps)
