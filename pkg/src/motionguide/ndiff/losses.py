"""Loss functions built from tensor primitives."""

from __future__ import annotations

import warnings

import numpy as np

from ..errors import NumericalFloorWarning, ShapeError
from .tensor import Tensor, _ensure_tensor

PROB_FLOOR = 1e-12


def cross_entropy(probabilities: Tensor, target) -> Tensor:
    """Negative log-likelihood of the target class under `probabilities`.

    Accepts a single distribution (1-D, integer target) or a batch
    (2-D, one target index per row, mean over the batch). A target
    probability below 1e-12 is clamped to the floor and flagged with a
    NumericalFloorWarning; the gradient still flows through the clamp.
    """
    probabilities = _ensure_tensor(probabilities)
    if probabilities.data.ndim not in (1, 2):
        raise ShapeError(
            f"cross_entropy expects 1-D or 2-D probabilities, got {probabilities.data.shape}")
    picked = probabilities.gather_rows(target)
    if np.any(picked.data < PROB_FLOOR):
        warnings.warn(
            "target probability below 1e-12 clamped to the numerical floor",
            NumericalFloorWarning,
            stacklevel=2,
        )
    return -(picked.floor_at(PROB_FLOOR).log().mean())


def mse(prediction: Tensor, target) -> Tensor:
    """Mean squared error against a constant target."""
    prediction = _ensure_tensor(prediction)
    target = _ensure_tensor(target)
    if prediction.data.shape != target.data.shape:
        raise ShapeError(
            f"mse shape mismatch: {prediction.data.shape} vs {target.data.shape}")
    diff = prediction - target
    return (diff * diff).mean()
