"""Synthetic stroke generator.

Each sample is a smooth multi-joint swing built from a Gaussian-bump
velocity profile integrated into a monotone swing progression, plus an
arc component and per-frame jitter. Class differences are controlled by
a single separation knob: the good class swings faster at the wrist,
peaks earlier, and jitters less. At separation 0 both classes draw from
identical distributions.
"""

from __future__ import annotations

import numpy as np

from .types import DEFAULT_JOINT_NAMES, Dataset, MotionSample, MotionSchema, SynthConfig

# chain positions in meters, wrist first
_BASE_POSE = np.array([
    [0.45, 0.25, 1.20],
    [0.25, 0.20, 1.35],
    [0.05, 0.15, 1.45],
    [0.00, 0.05, 0.95],
    [0.00, 0.00, 0.98],
])


def _skeleton(n_joints: int):
    names = list(DEFAULT_JOINT_NAMES[:n_joints])
    base = _BASE_POSE[:min(n_joints, 5)].copy()
    for k in range(5, n_joints):
        names.append(f"j{k}")
        base = np.vstack([base, [0.0, -0.05 * (k - 4), 0.9]])
    # wrist leads the swing, the trunk barely moves
    weights = np.geomspace(1.0, 0.05, n_joints)
    swing_dir = np.zeros((n_joints, 3))
    for j in range(n_joints):
        v = np.array([1.0, 0.35, 0.25 - 0.06 * j])
        swing_dir[j] = v / np.linalg.norm(v)
    arc_dir = np.array([0.0, -0.45, 0.9])
    arc_dir = arc_dir / np.linalg.norm(arc_dir)
    return names, base, weights, swing_dir, arc_dir


def _stroke_frames(rng: np.random.Generator, good: bool, config: SynthConfig,
                   base, weights, swing_dir, arc_dir) -> np.ndarray:
    t_len = config.frames
    sep = config.class_separation
    speed = rng.normal(1.0 + 0.25 * sep * good, 0.10)
    peak_frac = float(np.clip(rng.normal(0.58 - 0.05 * sep * good, 0.03), 0.15, 0.85))
    width_frac = max(abs(rng.normal(0.12, 0.015)), 0.02)
    arc_amp = rng.normal(0.15, 0.02)
    jitter_sd = config.noise_sd * (1.0 + 0.35 * sep * (not good))

    t = np.arange(t_len, dtype=np.float64)
    bump = np.exp(-((t - peak_frac * t_len) ** 2) / (2.0 * (width_frac * t_len) ** 2))
    progression = np.cumsum(bump)
    progression = progression / progression[-1]

    direction = swing_dir if config.stroke_type == "forehand_clear" else swing_dir * [-1, 1, 1]
    reach = 0.6 * speed
    frames = np.empty((t_len, 3 * len(weights)))
    for j, w in enumerate(weights):
        swing = reach * w * progression[:, None] * direction[j]
        arc = arc_amp * w * np.sin(np.pi * progression)[:, None] * arc_dir
        frames[:, 3 * j:3 * j + 3] = base[j] + swing + arc
    frames += rng.normal(0.0, jitter_sd, size=frames.shape)
    return frames


def generate_synthetic(config: SynthConfig) -> Dataset:
    """Build a balanced two-class stroke dataset, byte-identical per config."""
    rng = np.random.default_rng(config.seed)
    names, base, weights, swing_dir, arc_dir = _skeleton(config.joints)
    samples = []
    for cls, quality in ((0, "poor"), (1, "good")):
        for i in range(config.n_per_class):
            frames = _stroke_frames(rng, cls == 1, config, base, weights,
                                    swing_dir, arc_dir)
            samples.append(MotionSample(
                sample_id=f"{config.stroke_type}-{quality}-{i:04d}",
                stroke_type=config.stroke_type,
                frames=frames,
                label=cls,
            ))
    schema = MotionSchema(joint_names=tuple(names), frame_rate_hz=config.frame_rate_hz)
    return Dataset(samples, schema)
