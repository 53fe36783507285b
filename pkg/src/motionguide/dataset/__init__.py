from .types import (
    DEFAULT_JOINT_NAMES,
    STROKE_TYPES,
    Dataset,
    MotionSample,
    MotionSchema,
    StrokeQuality,
    SynthConfig,
)
from .synthetic import generate_synthetic
from .motionfile import load_motion_file, resample_frames, save_motion_file
from .normalize import Normalizer, normalize_dataset
from .splits import stratified_kfold
from .augment import AugmentPolicy, augment

__all__ = [
    "DEFAULT_JOINT_NAMES", "STROKE_TYPES", "Dataset", "MotionSample",
    "MotionSchema", "StrokeQuality", "SynthConfig", "generate_synthetic",
    "load_motion_file", "resample_frames", "save_motion_file", "Normalizer",
    "normalize_dataset", "stratified_kfold", "AugmentPolicy", "augment",
]
