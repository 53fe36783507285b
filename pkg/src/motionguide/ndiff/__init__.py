from .tensor import Tensor, conv1d, mean_pool1d, upsample1d
from .layers import (
    Conv1D,
    Dense,
    Flatten,
    Layer,
    MeanPool1D,
    ParameterSet,
    ReLU,
    Sequential,
    Softmax,
    Tanh,
    Unflatten,
    Upsample1D,
    layer_from_spec,
)
from .losses import cross_entropy, mse
from .optim import AdamState, adam_step

__all__ = [
    "Tensor", "conv1d", "mean_pool1d", "upsample1d",
    "Conv1D", "Dense", "Flatten", "Layer", "MeanPool1D", "ParameterSet",
    "ReLU", "Sequential", "Softmax", "Tanh", "Unflatten", "Upsample1D",
    "layer_from_spec", "cross_entropy", "mse", "AdamState", "adam_step",
]
