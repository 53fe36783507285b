"""Adam with bias correction, as a pure function over explicit state."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import GraphError, NonFiniteError
from .layers import ParameterSet


@dataclass
class AdamState:
    """First/second moment buffers plus the step counter, one per run."""

    learning_rate: float = 1e-3
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8
    t: int = 0
    m: dict = field(default_factory=dict)
    v: dict = field(default_factory=dict)


def adam_step(state: AdamState, params: ParameterSet) -> ParameterSet:
    """One bias-corrected Adam update, in place.

    Every parameter must carry a populated gradient; a missing or
    non-finite gradient aborts the step naming the offending parameter.
    """
    for name, p in params.items():
        if p.grad is None:
            raise GraphError(f"parameter {name!r} has no gradient; run backward first")
        if not np.all(np.isfinite(p.grad)):
            raise NonFiniteError(f"non-finite gradient for parameter {name!r}")
    state.t += 1
    b1, b2 = state.beta1, state.beta2
    bias1 = 1.0 - b1 ** state.t
    bias2 = 1.0 - b2 ** state.t
    for name, p in params.items():
        g = p.grad
        m = state.m.get(name)
        if m is None:
            m = np.zeros_like(p.data)
            state.v[name] = np.zeros_like(p.data)
        v = state.v[name]
        m = b1 * m + (1.0 - b1) * g
        v = b2 * v + (1.0 - b2) * (g * g)
        state.m[name] = m
        state.v[name] = v
        p.data = p.data - state.learning_rate * (m / bias1) / (np.sqrt(v / bias2) + state.eps)
    return params
