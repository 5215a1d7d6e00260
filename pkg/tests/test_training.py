import math

import numpy as np
import pytest

from hrdiag import (
    Activation,
    LayerSpec,
    Network,
    NetworkConfig,
    TrainParams,
    StoppingReason,
    accuracy_from_mse,
    evaluate,
    init_network,
    train,
    train_epoch,
    validation_trace,
    zero_gradients,
)

TANSIG = Activation.TANSIG
PURELIN = Activation.PURELIN

XOR_BATCH = [
    ([-1.0, -1.0], [-0.9]),
    ([-1.0, 1.0], [0.9]),
    ([1.0, -1.0], [0.9]),
    ([1.0, 1.0], [-0.9]),
]


def scalar_net(w=0.0, b=0.0):
    """Single purelin neuron on one input: output = w*x + b."""
    config = NetworkConfig(1, (LayerSpec(1, PURELIN),), seed=0)
    return Network(config, [np.array([[w]])], [np.array([b])])


def params(**kwargs):
    return TrainParams(**kwargs)


class TestTrainEpoch:
    # The scalar net with x=1, t=1 gives mse = (w + b - 1)**2 and lets us
    # steer the candidate MSE exactly through the learning rate.
    BATCH = [([1.0], [1.0])]

    def test_rejection_restores_network_and_shrinks_lr(self):
        net = scalar_net()
        lr = 2.0  # candidate w = b = 4, output 8, mse 49 >> 1.04 * 1.0
        step = train_epoch(net, zero_gradients(net), self.BATCH, params(), lr, previous_mse=1.0)
        assert not step.accepted
        assert step.mse == 1.0
        assert step.learning_rate == 0.7 * lr
        np.testing.assert_array_equal(step.net.weights[0], net.weights[0])
        np.testing.assert_array_equal(step.net.biases[0], net.biases[0])
        for v in step.velocity.weights + step.velocity.biases:
            np.testing.assert_array_equal(v, np.zeros_like(v))

    def test_rejection_just_above_ratio(self):
        # candidate mse = (4*lr - 1)**2; pick it just above 1.04 * 1.0
        lr = (1.0 + math.sqrt(1.1)) / 4.0
        step = train_epoch(scalar_net(), zero_gradients(scalar_net()), self.BATCH,
                           params(), lr, previous_mse=1.0)
        assert not step.accepted
        assert step.learning_rate == 0.7 * lr

    def test_worse_but_within_ratio_is_accepted_lr_unchanged(self):
        # candidate mse just above previous but below the 1.04 ratio
        lr = (1.0 + math.sqrt(1.03)) / 4.0
        net = scalar_net()
        step = train_epoch(net, zero_gradients(net), self.BATCH, params(), lr, previous_mse=1.0)
        assert step.accepted
        assert step.mse == pytest.approx(1.03, rel=1e-12)
        assert step.learning_rate == lr

    def test_improvement_grows_lr_exactly(self):
        net = scalar_net()
        lr = 0.01
        step = train_epoch(net, zero_gradients(net), self.BATCH, params(), lr, previous_mse=1.0)
        assert step.accepted
        assert step.mse == pytest.approx((4 * lr - 1.0) ** 2, rel=1e-12)
        assert step.learning_rate == 1.05 * lr

    def test_zero_gradient_zero_velocity_is_fixed_point(self):
        net = scalar_net(w=1.0, b=0.0)  # exact fit: output 1, target 1
        step = train_epoch(net, zero_gradients(net), self.BATCH, params(), 0.01, previous_mse=0.0)
        assert step.accepted
        assert step.mse == 0.0
        assert step.learning_rate == 0.01
        np.testing.assert_array_equal(step.net.weights[0], net.weights[0])

    def test_first_epoch_skips_rejection_and_lr_change(self):
        net = scalar_net()
        lr = 2.0  # hugely worse candidate, but no previous mse to compare
        step = train_epoch(net, zero_gradients(net), self.BATCH, params(), lr, previous_mse=None)
        assert step.accepted
        assert step.learning_rate == lr
        assert step.mse == pytest.approx(49.0)

    def test_non_finite_candidate_takes_rejection_path(self):
        net = scalar_net()
        lr = 1e308  # update overflows to inf
        step = train_epoch(net, zero_gradients(net), self.BATCH, params(), lr, previous_mse=1.0)
        assert not step.accepted
        assert step.mse == 1.0
        assert step.learning_rate == 0.7 * lr
        np.testing.assert_array_equal(step.net.weights[0], net.weights[0])

    def test_non_finite_candidate_on_first_epoch(self):
        net = scalar_net()
        step = train_epoch(net, zero_gradients(net), self.BATCH, params(), 1e308, previous_mse=None)
        assert not step.accepted
        assert step.mse == math.inf

    def test_non_adaptive_accepts_worse_candidates(self):
        net = scalar_net()
        lr = 2.0
        step = train_epoch(net, zero_gradients(net), self.BATCH, params(adaptive=False),
                           lr, previous_mse=1.0)
        assert step.accepted
        assert step.learning_rate == lr  # plain descent never moves the lr


class TestTrain:
    def test_zero_epochs(self):
        net = init_network(NetworkConfig(2, (LayerSpec(1, TANSIG),), seed=1))
        trained, trace = train(net, XOR_BATCH, params(max_epochs=0))
        assert trace.records == ()
        assert trace.stopping_reason is StoppingReason.EPOCH_BUDGET_EXHAUSTED
        for a, b in zip(trained.weights + trained.biases, net.weights + net.biases):
            np.testing.assert_array_equal(a, b)

    def test_xor_converges(self):
        config = NetworkConfig(2, (LayerSpec(2, TANSIG), LayerSpec(1, TANSIG)), seed=42)
        net = init_network(config)
        trained, trace = train(net, XOR_BATCH,
                               params(learning_rate=0.05, max_epochs=5000, error_goal=0.01))
        assert trace.stopping_reason is StoppingReason.GOAL_REACHED
        assert trace.final_mse < 0.01
        assert evaluate(trained, XOR_BATCH) == trace.final_mse

    def test_training_is_deterministic(self):
        config = NetworkConfig(2, (LayerSpec(2, TANSIG), LayerSpec(1, TANSIG)), seed=8)
        p = params(learning_rate=0.05, max_epochs=300)
        net1, trace1 = train(init_network(config), XOR_BATCH, p)
        net2, trace2 = train(init_network(config), XOR_BATCH, p)
        assert trace1 == trace2
        for a, b in zip(net1.weights + net1.biases, net2.weights + net2.biases):
            np.testing.assert_array_equal(a, b)

    def test_plain_gradient_descent_is_monotone_on_quadratic(self):
        # adaptive off, momentum zero: mse = (2w + b - 1)**2 must shrink
        # every epoch under a small fixed step.
        net = scalar_net()
        batch = [([2.0], [1.0])]
        _, trace = train(net, batch, params(learning_rate=0.01, momentum=0.0,
                                            adaptive=False, max_epochs=100,
                                            error_goal=1e-12))
        mses = [r.mse for r in trace.records]
        assert all(b <= a for a, b in zip(mses, mses[1:]))
        assert all(r.accepted for r in trace.records)
        assert all(r.learning_rate == 0.01 for r in trace.records)

    def test_trace_obeys_update_rule(self):
        config = NetworkConfig(2, (LayerSpec(2, TANSIG), LayerSpec(1, TANSIG)), seed=3)
        p = params(learning_rate=0.05, max_epochs=400, error_goal=1e-9)
        _, trace = train(init_network(config), XOR_BATCH, p)
        records = trace.records
        assert [r.epoch for r in records] == list(range(1, len(records) + 1))
        # accepted mse sequence never worsens beyond the allowed ratio
        accepted = trace.accepted_mses()
        assert all(b <= p.max_error_ratio * a for a, b in zip(accepted, accepted[1:]))
        # learning rate moves by exactly the configured factors
        for prev, cur in zip(records, records[1:]):
            if not prev.accepted:
                assert cur.learning_rate == p.lr_decrease * prev.learning_rate
            else:
                assert cur.learning_rate in (p.lr_increase * prev.learning_rate,
                                             prev.learning_rate)

    def test_goal_reached_iff_accepted_mse_below_goal(self):
        config = NetworkConfig(2, (LayerSpec(2, TANSIG), LayerSpec(1, TANSIG)), seed=42)
        p_goal = params(learning_rate=0.05, max_epochs=5000, error_goal=0.01)
        _, trace = train(init_network(config), XOR_BATCH, p_goal)
        assert trace.stopping_reason is StoppingReason.GOAL_REACHED
        assert trace.records[-1].accepted and trace.records[-1].mse <= 0.01

        p_budget = params(learning_rate=0.05, max_epochs=5, error_goal=1e-9)
        _, trace = train(init_network(config), XOR_BATCH, p_budget)
        assert trace.stopping_reason is StoppingReason.EPOCH_BUDGET_EXHAUSTED
        assert not any(r.accepted and r.mse <= 1e-9 for r in trace.records)


class TestEvaluate:
    def test_exact_fit_is_zero(self):
        net = scalar_net(w=2.0, b=-1.0)
        assert evaluate(net, [([1.0], [1.0]), ([2.0], [3.0])]) == 0.0

    def test_single_pattern_value(self):
        net = scalar_net(w=0.0, b=0.5)
        assert evaluate(net, [([0.0], [0.9])]) == pytest.approx(0.16, abs=1e-12)

    def test_requires_targets_shape(self):
        net = scalar_net()
        with pytest.raises(ValueError):
            evaluate(net, [([1.0], [1.0, 2.0])])


class TestValidationTrace:
    def test_already_at_goal_stops_at_first_epoch(self):
        net = scalar_net(w=1.0, b=0.0)
        holdout = [([1.0], [1.0]), ([2.0], [2.0])]
        trace = validation_trace(net, holdout, params(max_epochs=50))
        assert len(trace.records) == 1
        assert trace.stopping_reason is StoppingReason.GOAL_REACHED
        assert trace.final_mse == 0.0

    def test_error_line_format(self):
        net = scalar_net(w=1.0, b=0.0)
        trace = validation_trace(net, [([1.0], [1.0])], params(max_epochs=10))
        assert trace.error_lines() == ["error=0.000000 no.of epoches=1"]


class TestAccuracyFromMse:
    def test_reference_values(self):
        assert accuracy_from_mse(0.096841) == pytest.approx(99.903159, abs=1e-9)
        assert accuracy_from_mse(0.009174) == pytest.approx(99.990826, abs=1e-9)
        assert f"{accuracy_from_mse(0.096841):.2f}" == "99.90"
        assert f"{accuracy_from_mse(0.009174):.2f}" == "99.99"

    def test_bounds(self):
        assert accuracy_from_mse(0.0) == 100.0
        assert accuracy_from_mse(250.0) == 0.0
        with pytest.raises(ValueError):
            accuracy_from_mse(-0.1)


class TestTrainParams:
    @pytest.mark.parametrize("kwargs", [
        {"learning_rate": 0.0},
        {"learning_rate": math.nan},
        {"momentum": 1.0},
        {"momentum": -0.1},
        {"error_goal": 0.0},
        {"max_epochs": -1},
        {"lr_increase": 0.99},
        {"lr_decrease": 1.01},
        {"lr_decrease": 0.0},
        {"max_error_ratio": 1.0},
    ])
    def test_rejects_invalid(self, kwargs):
        with pytest.raises(ValueError):
            TrainParams(**kwargs)
