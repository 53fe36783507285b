"""Stratified k-fold index splitting."""

from __future__ import annotations

import numpy as np

from ..errors import ConfigError


def stratified_kfold(labels, k: int, seed: int) -> list:
    """Disjoint covering (train, validation) index splits, one per fold.

    Indices are shuffled within each class and dealt round-robin, so every
    fold's class proportions stay within one sample of the global ones.
    """
    labels = np.asarray(labels)
    if k < 2:
        raise ConfigError("k must be >= 2")
    rng = np.random.default_rng(seed)
    fold_of = np.empty(labels.shape[0], dtype=np.int64)
    for cls in np.unique(labels):
        members = np.nonzero(labels == cls)[0]
        if members.size < k:
            raise ConfigError(
                f"class {cls} has only {members.size} samples, needs >= {k} for {k} folds")
        members = rng.permutation(members)
        fold_of[members] = np.arange(members.size) % k
    splits = []
    everything = np.arange(labels.shape[0])
    for f in range(k):
        val = everything[fold_of == f]
        train = everything[fold_of != f]
        splits.append((train, val))
    return splits
