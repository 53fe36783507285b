import math

import numpy as np
import pytest

from motionguide.errors import GraphError, NonFiniteError, NumericalFloorWarning
from motionguide.ndiff import (
    AdamState,
    Dense,
    ParameterSet,
    Tensor,
    adam_step,
    cross_entropy,
    mse,
)

from oracles import adam_first_step, finite_difference_grads, max_relative_error


class TestCrossEntropy:
    def test_uniform_prediction(self):
        loss = cross_entropy(Tensor([0.5, 0.5]), 1)
        assert abs(loss.data.item() - math.log(2)) < 1e-12

    def test_perfect_prediction(self):
        loss = cross_entropy(Tensor([1.0, 0.0]), 0)
        assert loss.data.item() == 0.0

    def test_quarter_probability(self):
        loss = cross_entropy(Tensor([0.25, 0.75]), 0)
        assert abs(loss.data.item() - 1.386294) < 1e-6

    def test_floor_event_flagged(self):
        with pytest.warns(NumericalFloorWarning):
            loss = cross_entropy(Tensor([1.0, 0.0]), 1)
        assert np.isfinite(loss.data.item())
        assert abs(loss.data.item() - (-math.log(1e-12))) < 1e-6

    def test_batched_mean(self):
        probs = Tensor(np.array([[0.25, 0.75], [0.5, 0.5]]))
        loss = cross_entropy(probs, np.array([0, 1]))
        expected = (-math.log(0.25) - math.log(0.5)) / 2.0
        assert abs(loss.data.item() - expected) < 1e-12

    def test_gradient_wrt_logits_matches_finite_differences(self):
        rng = np.random.default_rng(42)
        x = Tensor(rng.normal(size=(4, 3)), requires_grad=True)
        w = Tensor(rng.normal(size=(3, 3)), requires_grad=True)
        targets = np.array([0, 2, 1, 0])

        def build():
            return cross_entropy((x @ w).softmax(), targets)

        out = build()
        out.backward()
        numeric = finite_difference_grads(lambda: build().data.item(),
                                          [x.data, w.data])
        assert max_relative_error(x.grad, numeric[0]) < 1e-4
        assert max_relative_error(w.grad, numeric[1]) < 1e-4


class TestAdam:
    def _single_param(self, value=0.0):
        ps = ParameterSet()
        p = ps.add("w", Tensor(np.array([value])))
        return ps, p

    def test_first_step_closed_form(self):
        ps, p = self._single_param()
        p.grad = np.array([1.0])
        state = AdamState(learning_rate=0.001)
        adam_step(state, ps)
        assert state.t == 1
        assert abs(p.data[0] - adam_first_step(1.0)) < 1e-12

    def test_second_step_closed_form(self):
        ps, p = self._single_param()
        state = AdamState(learning_rate=0.001)
        for _ in range(2):
            p.grad = np.array([1.0])
            adam_step(state, ps)
        # constant gradient keeps the bias-corrected ratio at ~1
        assert abs(p.data[0] - 2 * (-0.001)) < 1e-6

    def test_zero_gradient_keeps_parameters(self):
        ps, p = self._single_param(1.5)
        for _ in range(3):
            p.grad = np.array([0.0])
            adam_step(AdamState(), ps)
        assert p.data[0] == 1.5

    def test_missing_gradient_rejected(self):
        ps, _ = self._single_param()
        with pytest.raises(GraphError):
            adam_step(AdamState(), ps)

    def test_nonfinite_gradient_names_parameter(self):
        ps, p = self._single_param()
        p.grad = np.array([np.nan])
        with pytest.raises(NonFiniteError, match="w"):
            adam_step(AdamState(), ps)

    def test_determinism(self):
        results = []
        for _ in range(2):
            ps, p = self._single_param(0.3)
            state = AdamState(learning_rate=0.01)
            rng = np.random.default_rng(7)
            for _ in range(10):
                p.grad = rng.normal(size=1)
                adam_step(state, ps)
            results.append(p.data.copy())
        assert np.array_equal(results[0], results[1])


def test_dense_identity_map():
    layer = Dense(3, 3)
    layer.weight.data = np.eye(3)
    layer.bias.data = np.zeros(3)
    x = np.array([[1.0, -2.0, 3.0]])
    assert np.array_equal(layer(Tensor(x)).data, x)


def test_mse_zero_on_equal():
    x = Tensor(np.ones((2, 3)))
    assert mse(x, np.ones((2, 3))).data.item() == 0.0


def test_training_step_reduces_loss():
    rng = np.random.default_rng(3)
    layer = Dense(4, 2, rng=rng)
    ps = layer.params()
    x = Tensor(rng.normal(size=(8, 4)))
    targets = rng.integers(0, 2, size=8)
    state = AdamState(learning_rate=0.05)
    losses = []
    for _ in range(30):
        ps.zero_grad()
        loss = cross_entropy(layer(x).softmax(), targets)
        loss.backward()
        adam_step(state, ps)
        losses.append(loss.data.item())
    assert losses[-1] < losses[0]
