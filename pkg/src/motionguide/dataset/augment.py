"""Label-safe training augmentation: additive jitter and amplitude scaling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError
from .types import MotionSample


@dataclass(frozen=True)
class AugmentPolicy:
    jitter_sd: float = 0.01
    scale_low: float = 0.9
    scale_high: float = 1.1

    def __post_init__(self):
        if self.jitter_sd < 0:
            raise ConfigError("jitter_sd must be >= 0")
        if self.scale_low > self.scale_high:
            raise ConfigError("scale_low must be <= scale_high")


def augment(sample: MotionSample, policy: AugmentPolicy, seed: int) -> MotionSample:
    """One augmented copy: scale all channels by u ~ U[low, high], then add
    N(0, jitter_sd) noise per entry. The label is preserved."""
    rng = np.random.default_rng(seed)
    scale = rng.uniform(policy.scale_low, policy.scale_high)
    frames = sample.frames * scale
    frames = frames + rng.normal(0.0, policy.jitter_sd, size=frames.shape)
    return sample.with_frames(frames, suffix="~aug")
