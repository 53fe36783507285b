"""Per-channel z-scoring with an exact inverse."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from ..errors import DegenerateChannelWarning
from .types import Dataset


@dataclass
class Normalizer:
    mean: np.ndarray
    scale: np.ndarray
    clamped_channels: tuple = ()

    @classmethod
    def fit(cls, frames_list) -> "Normalizer":
        """Fit channel statistics from the given samples only."""
        stacked = np.concatenate([np.asarray(f) for f in frames_list], axis=0)
        mean = stacked.mean(axis=0)
        sd = stacked.std(axis=0)
        clamped = tuple(int(i) for i in np.nonzero(sd < 1e-12)[0])
        if clamped:
            warnings.warn(
                f"zero-variance channels {clamped} had their scale clamped to 1",
                DegenerateChannelWarning, stacklevel=2)
        scale = np.where(sd < 1e-12, 1.0, sd)
        return cls(mean=mean, scale=scale, clamped_channels=clamped)

    def transform(self, frames: np.ndarray) -> np.ndarray:
        return (frames - self.mean) / self.scale

    def inverse(self, frames: np.ndarray) -> np.ndarray:
        return frames * self.scale + self.mean


def normalize_dataset(dataset: Dataset, stats_from) -> tuple[Dataset, Normalizer]:
    """Z-score every sample using statistics from the `stats_from` indices.

    Statistics never see samples outside that index set.
    """
    train_frames = [dataset.samples[int(i)].frames for i in stats_from]
    normalizer = Normalizer.fit(train_frames)
    return dataset.map_frames(normalizer.transform), normalizer
