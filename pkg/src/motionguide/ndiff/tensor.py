"""Reverse-mode autodiff over float64 numpy arrays.

A Tensor is a node in a DAG: leaves hold data (optionally trainable),
interior nodes remember their parents and a closure that routes the
upstream gradient to them. Everything runs in 64-bit floats so results
are reproducible bit for bit.
"""

from __future__ import annotations

import numpy as np

from ..errors import GraphError, ShapeError


def _as_array(x) -> np.ndarray:
    return np.asarray(x, dtype=np.float64)


def _ensure_tensor(x) -> "Tensor":
    return x if isinstance(x, Tensor) else Tensor(_as_array(x))


def _unbroadcast(grad: np.ndarray, shape: tuple) -> np.ndarray:
    """Sum `grad` down to `shape`, undoing numpy broadcasting."""
    while grad.ndim > len(shape):
        grad = grad.sum(axis=0)
    for axis, dim in enumerate(shape):
        if dim == 1 and grad.shape[axis] != 1:
            grad = grad.sum(axis=axis, keepdims=True)
    return grad


class Tensor:
    __slots__ = ("data", "grad", "requires_grad", "_parents", "_backward")

    def __init__(self, data, requires_grad=False, _parents=(), _backward=None):
        self.data = _as_array(data)
        self.grad = None
        self.requires_grad = bool(requires_grad) or any(
            p.requires_grad for p in _parents
        )
        self._parents = _parents
        self._backward = _backward

    @property
    def shape(self):
        return self.data.shape

    @property
    def size(self):
        return self.data.size

    def __repr__(self):
        return f"Tensor(shape={self.data.shape}, requires_grad={self.requires_grad})"

    def zero_grad(self):
        self.grad = None

    def detach(self) -> "Tensor":
        return Tensor(self.data.copy())

    def _accumulate(self, g: np.ndarray):
        if not self.requires_grad:
            return
        self.grad = g if self.grad is None else self.grad + g

    # ---- graph traversal ------------------------------------------------

    def backward(self):
        """Fill gradient buffers of every ancestor by reverse accumulation.

        The root must be a scalar; raises GraphError otherwise.
        """
        if self.data.size != 1:
            raise GraphError(
                f"backward root must be scalar, got shape {self.data.shape}"
            )
        topo: list[Tensor] = []
        seen: set[int] = set()
        stack: list[tuple[Tensor, bool]] = [(self, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                topo.append(node)
                continue
            if id(node) in seen:
                continue
            seen.add(id(node))
            stack.append((node, True))
            for parent in node._parents:
                if id(parent) not in seen:
                    stack.append((parent, False))
        self.grad = np.ones_like(self.data)
        for node in reversed(topo):
            if node._backward is not None and node.grad is not None:
                node._backward(node.grad)

    # ---- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _ensure_tensor(other)
        out = Tensor(self.data + other.data, _parents=(self, other))

        def bwd(g, a=self, b=other):
            a._accumulate(_unbroadcast(g, a.data.shape))
            b._accumulate(_unbroadcast(g, b.data.shape))

        out._backward = bwd
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Tensor(-self.data, _parents=(self,))

        def bwd(g, a=self):
            a._accumulate(-g)

        out._backward = bwd
        return out

    def __sub__(self, other):
        return self + (-_ensure_tensor(other))

    def __rsub__(self, other):
        return _ensure_tensor(other) + (-self)

    def __mul__(self, other):
        other = _ensure_tensor(other)
        out = Tensor(self.data * other.data, _parents=(self, other))

        def bwd(g, a=self, b=other):
            a._accumulate(_unbroadcast(g * b.data, a.data.shape))
            b._accumulate(_unbroadcast(g * a.data, b.data.shape))

        out._backward = bwd
        return out

    __rmul__ = __mul__

    def __matmul__(self, other):
        other = _ensure_tensor(other)
        if self.data.ndim != 2 or other.data.ndim != 2:
            raise ShapeError(
                f"matmul expects 2-D operands, got {self.data.shape} @ {other.data.shape}"
            )
        if self.data.shape[1] != other.data.shape[0]:
            raise ShapeError(
                f"matmul inner dims differ: {self.data.shape} @ {other.data.shape}"
            )
        out = Tensor(self.data @ other.data, _parents=(self, other))

        def bwd(g, a=self, b=other):
            a._accumulate(g @ b.data.T)
            b._accumulate(a.data.T @ g)

        out._backward = bwd
        return out

    # ---- shape ops -------------------------------------------------------

    def reshape(self, *shape):
        if len(shape) == 1 and isinstance(shape[0], (tuple, list)):
            shape = tuple(shape[0])
        out = Tensor(self.data.reshape(shape), _parents=(self,))

        def bwd(g, a=self):
            a._accumulate(g.reshape(a.data.shape))

        out._backward = bwd
        return out

    # ---- reductions ------------------------------------------------------

    def sum(self):
        out = Tensor(self.data.sum(), _parents=(self,))

        def bwd(g, a=self):
            a._accumulate(np.broadcast_to(g, a.data.shape).copy())

        out._backward = bwd
        return out

    def mean(self):
        n = self.data.size
        out = Tensor(self.data.mean(), _parents=(self,))

        def bwd(g, a=self, n=n):
            a._accumulate(np.broadcast_to(g / n, a.data.shape).copy())

        out._backward = bwd
        return out

    # ---- elementwise nonlinearities ---------------------------------------

    def relu(self):
        out = Tensor(np.maximum(self.data, 0.0), _parents=(self,))

        def bwd(g, a=self):
            a._accumulate(g * (a.data > 0.0))

        out._backward = bwd
        return out

    def tanh(self):
        y = np.tanh(self.data)
        out = Tensor(y, _parents=(self,))

        def bwd(g, a=self, y=y):
            a._accumulate(g * (1.0 - y * y))

        out._backward = bwd
        return out

    def exp(self):
        y = np.exp(self.data)
        out = Tensor(y, _parents=(self,))

        def bwd(g, a=self, y=y):
            a._accumulate(g * y)

        out._backward = bwd
        return out

    def log(self):
        out = Tensor(np.log(self.data), _parents=(self,))

        def bwd(g, a=self):
            a._accumulate(g / a.data)

        out._backward = bwd
        return out

    def floor_at(self, floor: float):
        """Clamp values below `floor` up to it.

        The gradient passes through unchanged; the floor only bounds the
        value, so downstream logs stay finite without cutting the signal.
        """
        out = Tensor(np.maximum(self.data, floor), _parents=(self,))

        def bwd(g, a=self):
            a._accumulate(g)

        out._backward = bwd
        return out

    def softmax(self, axis: int = -1):
        shifted = self.data - self.data.max(axis=axis, keepdims=True)
        e = np.exp(shifted)
        y = e / e.sum(axis=axis, keepdims=True)
        out = Tensor(y, _parents=(self,))

        def bwd(g, a=self, y=y, axis=axis):
            dot = (g * y).sum(axis=axis, keepdims=True)
            a._accumulate(y * (g - dot))

        out._backward = bwd
        return out

    def gather_rows(self, indices):
        """Pick out[i] = self[i, indices[i]] from a (B, K) tensor.

        With a 1-D tensor and a scalar index this degenerates to a single
        element (returned with shape (1,)).
        """
        if self.data.ndim == 1:
            idx = np.asarray([int(indices)])
            data2d = self.data[None, :]
        elif self.data.ndim == 2:
            idx = np.asarray(indices, dtype=np.int64).reshape(-1)
            if idx.shape[0] != self.data.shape[0]:
                raise ShapeError(
                    f"gather_rows got {idx.shape[0]} indices for {self.data.shape[0]} rows"
                )
            data2d = self.data
        else:
            raise ShapeError(f"gather_rows expects 1-D or 2-D, got {self.data.shape}")
        if idx.min() < 0 or idx.max() >= data2d.shape[1]:
            raise ShapeError(
                f"gather index out of range [0, {data2d.shape[1]}): {idx}"
            )
        rows = np.arange(data2d.shape[0])
        out = Tensor(data2d[rows, idx], _parents=(self,))

        def bwd(g, a=self, rows=rows, idx=idx):
            buf = np.zeros_like(a.data)
            if a.data.ndim == 1:
                buf[idx[0]] = g[0]
            else:
                buf[rows, idx] = g
            a._accumulate(buf)

        out._backward = bwd
        return out


# ---- sequence primitives (batch, time, channels) ---------------------------


def _check_btc(x: Tensor, op: str):
    if x.data.ndim != 3:
        raise ShapeError(f"{op} expects (batch, time, channels), got {x.data.shape}")


def conv1d(x: Tensor, weight: Tensor, bias: Tensor | None, stride: int = 1,
           padding: int = 0) -> Tensor:
    """Cross-correlation along time: (B, T, Cin) -> (B, T_out, Cout).

    weight is (Cout, Cin, K); zero padding is applied on both ends.
    """
    _check_btc(x, "conv1d")
    if weight.data.ndim != 3:
        raise ShapeError(f"conv1d weight must be (Cout, Cin, K), got {weight.data.shape}")
    b_sz, t_in, c_in = x.data.shape
    c_out, c_in_w, k = weight.data.shape
    if c_in_w != c_in:
        raise ShapeError(f"conv1d channel mismatch: input has {c_in}, weight expects {c_in_w}")
    t_pad = t_in + 2 * padding
    t_out = (t_pad - k) // stride + 1
    if t_out < 1:
        raise ShapeError(f"conv1d kernel {k} (stride {stride}, pad {padding}) too long for T={t_in}")

    xp = x.data
    if padding > 0:
        xp = np.pad(xp, ((0, 0), (padding, padding), (0, 0)))
    idx = stride * np.arange(t_out)[:, None] + np.arange(k)[None, :]
    windows = xp[:, idx, :]  # (B, T_out, K, Cin)
    out_data = np.einsum("btkc,ock->bto", windows, weight.data, optimize=True)
    parents = [x, weight]
    if bias is not None:
        out_data = out_data + bias.data
        parents.append(bias)
    out = Tensor(out_data, _parents=tuple(parents))

    def bwd(g, x=x, weight=weight, bias=bias, windows=windows, idx=idx,
            padding=padding, t_in=t_in, t_pad=t_pad, k=k):
        weight._accumulate(np.einsum("btkc,bto->ock", windows, g, optimize=True))
        if bias is not None:
            bias._accumulate(g.sum(axis=(0, 1)))
        if x.requires_grad:
            gw = np.einsum("bto,ock->btkc", g, weight.data, optimize=True)
            gxp = np.zeros((g.shape[0], t_pad, windows.shape[3]))
            for kk in range(k):
                # time indices are distinct for fixed kk, so += is safe
                gxp[:, idx[:, kk], :] += gw[:, :, kk, :]
            x._accumulate(gxp[:, padding:padding + t_in, :] if padding else gxp)

    out._backward = bwd
    return out


def mean_pool1d(x: Tensor, pool: int | None = None) -> Tensor:
    """Mean over time. pool=None collapses the whole axis to (B, C);
    an integer pools non-overlapping windows to (B, T/pool, C)."""
    _check_btc(x, "mean_pool1d")
    b_sz, t, c = x.data.shape
    if pool is None:
        out = Tensor(x.data.mean(axis=1), _parents=(x,))

        def bwd(g, x=x, t=t):
            x._accumulate(np.repeat(g[:, None, :] / t, t, axis=1))

        out._backward = bwd
        return out

    if t % pool != 0:
        raise ShapeError(f"mean_pool1d window {pool} does not divide T={t}")
    out = Tensor(x.data.reshape(b_sz, t // pool, pool, c).mean(axis=2), _parents=(x,))

    def bwd(g, x=x, pool=pool, b_sz=b_sz, t=t, c=c):
        x._accumulate(np.repeat(g / pool, pool, axis=1))

    out._backward = bwd
    return out


def upsample1d(x: Tensor, factor: int) -> Tensor:
    """Repeat each frame `factor` times along the time axis."""
    _check_btc(x, "upsample1d")
    if factor < 1:
        raise ShapeError(f"upsample1d factor must be >= 1, got {factor}")
    b_sz, t, c = x.data.shape
    out = Tensor(np.repeat(x.data, factor, axis=1), _parents=(x,))

    def bwd(g, x=x, factor=factor, b_sz=b_sz, t=t, c=c):
        x._accumulate(g.reshape(b_sz, t, factor, c).sum(axis=2))

    out._backward = bwd
    return out
