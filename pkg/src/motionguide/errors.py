"""Exception and warning types shared across the package."""


class MotionGuideError(Exception):
    """Base class for all domain errors."""

    category = "internal"


class ShapeError(MotionGuideError):
    """Structural mismatch between tensor/layer shapes."""

    category = "shape"


class GraphError(MotionGuideError):
    """Malformed computation graph (non-scalar backward root, missing grads)."""

    category = "graph"


class NonFiniteError(MotionGuideError):
    """A NaN or Inf appeared where finite values are required."""

    category = "numeric"


class ConfigError(MotionGuideError):
    """Invalid configuration values."""

    category = "config"


class IngestionError(MotionGuideError):
    """Motion file could not be parsed; message carries row/column location."""

    category = "data"


class TrainingDivergedError(MotionGuideError):
    """Training loss became non-finite; carries the last finite epoch."""

    category = "training"

    def __init__(self, message, last_finite_epoch=None, trace=None):
        super().__init__(message)
        self.last_finite_epoch = last_finite_epoch
        self.trace = trace or []


class NoCandidateError(MotionGuideError):
    """No reference sample is predicted as the requested target class."""

    category = "explain"


class BundleFormatError(MotionGuideError):
    """Model bundle file is corrupt, truncated, or has the wrong version."""

    category = "bundle"


class NumericalFloorWarning(RuntimeWarning):
    """A probability was clamped to the numerical floor inside a loss."""


class DegenerateChannelWarning(RuntimeWarning):
    """A zero-variance channel had its scale clamped during normalization."""


class UndefinedRecallWarning(RuntimeWarning):
    """A class absent from the labels made its recall undefined (treated as 0)."""
