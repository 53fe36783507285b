"""Layer objects over the autodiff tensor, plus the named parameter registry.

The primitive set is deliberately small: dense, conv1d, relu, tanh,
softmax, mean-pool, upsample, and the reshape/flatten glue. Each layer
knows how to describe itself as a plain dict so trained stacks can be
rebuilt from a serialized bundle.
"""

from __future__ import annotations

from collections.abc import Mapping

import numpy as np

from ..errors import ShapeError
from .tensor import Tensor, conv1d, mean_pool1d, upsample1d


class ParameterSet(Mapping):
    """Named map of trainable tensors with their paired gradient buffers."""

    def __init__(self):
        self._params: dict[str, Tensor] = {}

    def add(self, name: str, tensor: Tensor) -> Tensor:
        if name in self._params:
            raise ValueError(f"duplicate parameter name: {name}")
        tensor.requires_grad = True
        self._params[name] = tensor
        return tensor

    def merge(self, prefix: str, other: "ParameterSet"):
        for name, tensor in other.items():
            self._params[f"{prefix}.{name}"] = tensor

    def zero_grad(self):
        for tensor in self._params.values():
            tensor.grad = None

    def __getitem__(self, name):
        return self._params[name]

    def __iter__(self):
        return iter(self._params)

    def __len__(self):
        return len(self._params)

    def items(self):
        return self._params.items()


def glorot(rng: np.random.Generator, shape: tuple, fan_in: int, fan_out: int) -> np.ndarray:
    limit = np.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-limit, limit, size=shape)


class Layer:
    """Base: callable on a Tensor, exposes params and a serializable spec."""

    def params(self) -> ParameterSet:
        return ParameterSet()

    def __call__(self, x: Tensor) -> Tensor:
        raise NotImplementedError

    def spec(self) -> dict:
        raise NotImplementedError


class Dense(Layer):
    def __init__(self, in_dim: int, out_dim: int, rng: np.random.Generator | None = None):
        self.in_dim = in_dim
        self.out_dim = out_dim
        rng = rng or np.random.default_rng(0)
        self.weight = Tensor(glorot(rng, (in_dim, out_dim), in_dim, out_dim),
                             requires_grad=True)
        self.bias = Tensor(np.zeros(out_dim), requires_grad=True)

    def params(self):
        ps = ParameterSet()
        ps.add("weight", self.weight)
        ps.add("bias", self.bias)
        return ps

    def __call__(self, x: Tensor) -> Tensor:
        if x.data.ndim != 2:
            raise ShapeError(f"dense expects (batch, features), got {x.data.shape}")
        if x.data.shape[1] != self.in_dim:
            raise ShapeError(f"dense expects {self.in_dim} features, got {x.data.shape[1]}")
        return x @ self.weight + self.bias

    def spec(self):
        return {"kind": "dense", "in_dim": self.in_dim, "out_dim": self.out_dim}


class Conv1D(Layer):
    def __init__(self, in_channels: int, out_channels: int, kernel_size: int,
                 stride: int = 1, padding: int = 0,
                 rng: np.random.Generator | None = None):
        self.in_channels = in_channels
        self.out_channels = out_channels
        self.kernel_size = kernel_size
        self.stride = stride
        self.padding = padding
        rng = rng or np.random.default_rng(0)
        fan_in = in_channels * kernel_size
        fan_out = out_channels * kernel_size
        self.weight = Tensor(
            glorot(rng, (out_channels, in_channels, kernel_size), fan_in, fan_out),
            requires_grad=True)
        self.bias = Tensor(np.zeros(out_channels), requires_grad=True)

    def params(self):
        ps = ParameterSet()
        ps.add("weight", self.weight)
        ps.add("bias", self.bias)
        return ps

    def __call__(self, x: Tensor) -> Tensor:
        return conv1d(x, self.weight, self.bias, stride=self.stride,
                      padding=self.padding)

    def spec(self):
        return {"kind": "conv1d", "in_channels": self.in_channels,
                "out_channels": self.out_channels, "kernel_size": self.kernel_size,
                "stride": self.stride, "padding": self.padding}


class ReLU(Layer):
    def __call__(self, x):
        return x.relu()

    def spec(self):
        return {"kind": "relu"}


class Tanh(Layer):
    def __call__(self, x):
        return x.tanh()

    def spec(self):
        return {"kind": "tanh"}


class Softmax(Layer):
    def __init__(self, axis: int = -1):
        self.axis = axis

    def __call__(self, x):
        return x.softmax(axis=self.axis)

    def spec(self):
        return {"kind": "softmax", "axis": self.axis}


class MeanPool1D(Layer):
    """pool=None averages the whole time axis; an int pools windows."""

    def __init__(self, pool: int | None = None):
        self.pool = pool

    def __call__(self, x):
        return mean_pool1d(x, self.pool)

    def spec(self):
        return {"kind": "mean_pool", "pool": self.pool}


class Upsample1D(Layer):
    def __init__(self, factor: int):
        self.factor = factor

    def __call__(self, x):
        return upsample1d(x, self.factor)

    def spec(self):
        return {"kind": "upsample", "factor": self.factor}


class Flatten(Layer):
    """(B, T, C) -> (B, T*C)."""

    def __call__(self, x):
        if x.data.ndim != 3:
            raise ShapeError(f"flatten expects 3-D input, got {x.data.shape}")
        b = x.data.shape[0]
        return x.reshape(b, x.data.shape[1] * x.data.shape[2])

    def spec(self):
        return {"kind": "flatten"}


class Unflatten(Layer):
    """(B, T*C) -> (B, T, C)."""

    def __init__(self, frames: int, channels: int):
        self.frames = frames
        self.channels = channels

    def __call__(self, x):
        if x.data.ndim != 2 or x.data.shape[1] != self.frames * self.channels:
            raise ShapeError(
                f"unflatten expects (B, {self.frames * self.channels}), got {x.data.shape}")
        return x.reshape(x.data.shape[0], self.frames, self.channels)

    def spec(self):
        return {"kind": "unflatten", "frames": self.frames, "channels": self.channels}


class Sequential(Layer):
    def __init__(self, layers: list[Layer]):
        self.layers = list(layers)

    def __call__(self, x):
        for layer in self.layers:
            x = layer(x)
        return x

    def params(self):
        ps = ParameterSet()
        for i, layer in enumerate(self.layers):
            sub = layer.params()
            if len(sub):
                ps.merge(f"{i}_{layer.spec()['kind']}", sub)
        return ps

    def spec(self):
        return {"kind": "sequential", "layers": [l.spec() for l in self.layers]}


_LAYER_KINDS = {
    "dense": lambda s: Dense(s["in_dim"], s["out_dim"]),
    "conv1d": lambda s: Conv1D(s["in_channels"], s["out_channels"], s["kernel_size"],
                               s["stride"], s["padding"]),
    "relu": lambda s: ReLU(),
    "tanh": lambda s: Tanh(),
    "softmax": lambda s: Softmax(s.get("axis", -1)),
    "mean_pool": lambda s: MeanPool1D(s.get("pool")),
    "upsample": lambda s: Upsample1D(s["factor"]),
    "flatten": lambda s: Flatten(),
    "unflatten": lambda s: Unflatten(s["frames"], s["channels"]),
}


def layer_from_spec(spec: dict) -> Layer:
    """Rebuild a layer (with placeholder weights) from its spec dict."""
    kind = spec.get("kind")
    if kind == "sequential":
        return Sequential([layer_from_spec(s) for s in spec["layers"]])
    if kind not in _LAYER_KINDS:
        raise ShapeError(f"unknown layer kind: {kind!r}")
    return _LAYER_KINDS[kind](spec)
