"""Core data containers for stroke motions."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import IntEnum

import numpy as np

from ..errors import ConfigError, ShapeError


class StrokeQuality(IntEnum):
    POOR = 0
    GOOD = 1

    @classmethod
    def parse(cls, value) -> "StrokeQuality":
        if isinstance(value, str):
            try:
                return cls[value.upper()]
            except KeyError:
                raise ConfigError(f"unknown stroke quality {value!r}") from None
        return cls(int(value))


STROKE_TYPES = ("forehand_clear", "backhand_drive")
DEFAULT_JOINT_NAMES = ("wrist", "elbow", "shoulder", "hip", "root")


@dataclass(frozen=True)
class MotionSchema:
    joint_names: tuple
    frame_rate_hz: float = 60.0

    @property
    def n_joints(self) -> int:
        return len(self.joint_names)

    @property
    def n_channels(self) -> int:
        return 3 * len(self.joint_names)


@dataclass
class MotionSample:
    """One stroke: a (frames, 3*joints) position matrix plus metadata."""

    sample_id: str
    stroke_type: str
    frames: np.ndarray
    label: int | None = None

    def __post_init__(self):
        self.frames = np.asarray(self.frames, dtype=np.float64)
        if self.frames.ndim != 2 or self.frames.shape[0] < 2:
            raise ShapeError(
                f"sample {self.sample_id}: frames must be (T>=2, D), got {self.frames.shape}")
        if self.frames.shape[1] % 3 != 0:
            raise ShapeError(
                f"sample {self.sample_id}: channel count {self.frames.shape[1]} is not 3*joints")
        if not np.all(np.isfinite(self.frames)):
            t, d = np.argwhere(~np.isfinite(self.frames))[0]
            raise ShapeError(
                f"sample {self.sample_id}: non-finite value at frame {t}, channel {d}")

    @property
    def n_frames(self) -> int:
        return self.frames.shape[0]

    @property
    def n_channels(self) -> int:
        return self.frames.shape[1]

    def with_frames(self, frames: np.ndarray, suffix: str = "") -> "MotionSample":
        return MotionSample(self.sample_id + suffix, self.stroke_type,
                            frames, self.label)


@dataclass
class Dataset:
    """Immutable-by-convention collection of schema-consistent samples."""

    samples: list
    schema: MotionSchema

    def __post_init__(self):
        if self.samples:
            t0 = self.samples[0].n_frames
            d0 = self.samples[0].n_channels
            for s in self.samples:
                if s.n_frames != t0 or s.n_channels != d0:
                    raise ShapeError(
                        f"sample {s.sample_id} has shape {s.frames.shape}, "
                        f"expected ({t0}, {d0})")
            if d0 != self.schema.n_channels:
                raise ShapeError(
                    f"samples have {d0} channels but schema names "
                    f"{self.schema.n_joints} joints")

    def __len__(self):
        return len(self.samples)

    @property
    def n_frames(self) -> int:
        return self.samples[0].n_frames

    @property
    def n_channels(self) -> int:
        return self.samples[0].n_channels

    def labels(self) -> np.ndarray:
        return np.array([-1 if s.label is None else s.label for s in self.samples])

    def frames_array(self) -> np.ndarray:
        return np.stack([s.frames for s in self.samples])

    def subset(self, indices) -> "Dataset":
        return Dataset([self.samples[int(i)] for i in indices], self.schema)

    def map_frames(self, fn) -> "Dataset":
        return Dataset([s.with_frames(fn(s.frames)) for s in self.samples], self.schema)


@dataclass(frozen=True)
class SynthConfig:
    """Deterministic recipe for a synthetic stroke dataset."""

    n_per_class: int = 50
    frames: int = 60
    joints: int = 5
    class_separation: float = 2.0
    noise_sd: float = 0.02
    seed: int = 0
    stroke_type: str = "forehand_clear"
    frame_rate_hz: float = 60.0

    def __post_init__(self):
        if self.n_per_class < 1:
            raise ConfigError("n_per_class must be >= 1")
        if self.frames < 2:
            raise ConfigError("frames must be >= 2")
        if self.joints < 1:
            raise ConfigError("joints must be >= 1")
        if self.class_separation < 0:
            raise ConfigError("class_separation must be >= 0")
        if self.noise_sd < 0:
            raise ConfigError("noise_sd must be >= 0")
        if self.stroke_type not in STROKE_TYPES:
            raise ConfigError(
                f"stroke_type must be one of {STROKE_TYPES}, got {self.stroke_type!r}")
