"""Full-batch gradient-descent training with momentum and adaptive learning rate.

One epoch applies a single candidate update computed from the gradient over
the whole batch:

    delta = momentum * velocity - learning_rate * gradient

The candidate is then re-scored on the same batch.  In adaptive mode a
candidate whose MSE exceeds ``max_error_ratio`` times the previous epoch's
MSE is rejected outright: the network keeps its parameters, the momentum
velocity is reset to zero and the learning rate shrinks by ``lr_decrease``.
An accepted candidate that strictly improves the MSE grows the learning
rate by ``lr_increase``.  The first epoch has no previous MSE, so the
rejection test is skipped and the learning rate left unchanged.

A non-finite candidate MSE (numerical divergence) always takes the
rejection path, whether or not adaptive mode is on, so divergent steps can
never poison the parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .network import (
    Gradients,
    Network,
    as_batch_arrays,
    backprop_gradients,
    zero_gradients,
    _forward_arrays,
    _mse,
)


@dataclass(frozen=True)
class TrainParams:
    """Hyperparameters of the training loop.

    ``learning_rate`` is the initial step size; in adaptive mode it moves
    within [lr_decrease, lr_increase] multiplicative steps as described in
    the module docstring.  ``error_goal`` stops training early once an
    accepted epoch reaches it.
    """

    learning_rate: float = 0.01
    momentum: float = 0.9
    error_goal: float = 0.01
    max_epochs: int = 1000
    lr_increase: float = 1.05
    lr_decrease: float = 0.7
    max_error_ratio: float = 1.04
    adaptive: bool = True

    def __post_init__(self):
        for name in ("learning_rate", "momentum", "error_goal", "lr_increase",
                     "lr_decrease", "max_error_ratio"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")
        if not 0 <= self.momentum < 1:
            raise ValueError("momentum must lie in [0, 1)")
        if self.error_goal <= 0:
            raise ValueError("error_goal must be > 0")
        if self.max_epochs < 0:
            raise ValueError("max_epochs must be >= 0")
        if not self.lr_decrease < 1 < self.lr_increase:
            raise ValueError("need lr_decrease < 1 < lr_increase")
        if self.lr_decrease <= 0:
            raise ValueError("lr_decrease must be > 0")
        if self.max_error_ratio <= 1:
            raise ValueError("max_error_ratio must be > 1")


class StoppingReason(Enum):
    GOAL_REACHED = "goal_reached"
    EPOCH_BUDGET_EXHAUSTED = "epoch_budget_exhausted"


@dataclass(frozen=True)
class EpochRecord:
    """One trace row: the MSE reported for the epoch, the learning rate the
    epoch's update attempt used, and whether the update was accepted.

    Rejected epochs repeat the previous accepted MSE, so the trace always
    reflects the actual network state.
    """

    epoch: int
    mse: float
    learning_rate: float
    accepted: bool


@dataclass(frozen=True)
class TrainingTrace:
    records: tuple[EpochRecord, ...]
    stopping_reason: StoppingReason

    @property
    def final_mse(self) -> float | None:
        return self.records[-1].mse if self.records else None

    def accepted_mses(self) -> list[float]:
        return [r.mse for r in self.records if r.accepted]

    def error_lines(self) -> list[str]:
        """Trace formatted as 'error=<mse> no.of epoches=<epoch>' lines."""
        return [f"error={r.mse:.6f} no.of epoches={r.epoch}" for r in self.records]


class EpochStep(NamedTuple):
    net: Network
    velocity: Gradients
    learning_rate: float
    mse: float
    accepted: bool


def evaluate(net: Network, batch) -> float:
    """MSE of the network's outputs against the batch targets. No updates."""
    X, T = as_batch_arrays(batch, net)
    return _mse(_forward_arrays(net, X)[-1], T)


def train_epoch(
    net: Network,
    velocity: Gradients,
    batch,
    params: TrainParams,
    learning_rate: float,
    previous_mse: float | None,
) -> EpochStep:
    """Run one full-batch update attempt; see the module docstring for the rule.

    ``previous_mse`` is the MSE reported for the previous epoch, or None on
    the first epoch (no rejection test, learning rate left unchanged).
    Returns the possibly-updated network, the new velocity, the learning
    rate for the next epoch, the reported MSE and the acceptance flag.
    """
    if previous_mse is not None and not previous_mse >= 0:
        raise ValueError(f"previous_mse must be >= 0, got {previous_mse!r}")
    grads, _ = backprop_gradients(net, batch)

    # Divergent candidates are detected via the finiteness check below, so
    # overflow warnings carry no information here.
    with np.errstate(all="ignore"):
        delta_w = [params.momentum * v - learning_rate * g
                   for v, g in zip(velocity.weights, grads.weights)]
        delta_b = [params.momentum * v - learning_rate * g
                   for v, g in zip(velocity.biases, grads.biases)]
        cand_w = [W + d for W, d in zip(net.weights, delta_w)]
        cand_b = [b + d for b, d in zip(net.biases, delta_b)]
        if all(np.isfinite(a).all() for a in cand_w) and all(np.isfinite(a).all() for a in cand_b):
            candidate = Network(net.config, cand_w, cand_b)
            candidate_mse = evaluate(candidate, batch)
        else:
            candidate = None
            candidate_mse = math.nan

    worse_than_allowed = (
        params.adaptive
        and previous_mse is not None
        and candidate_mse > params.max_error_ratio * previous_mse
    )
    if not math.isfinite(candidate_mse) or worse_than_allowed:
        reported = previous_mse if previous_mse is not None else math.inf
        return EpochStep(net, zero_gradients(net), params.lr_decrease * learning_rate,
                         reported, False)

    new_velocity = Gradients(delta_w, delta_b)
    if params.adaptive and previous_mse is not None and candidate_mse < previous_mse:
        new_lr = params.lr_increase * learning_rate
    else:
        new_lr = learning_rate
    return EpochStep(candidate, new_velocity, new_lr, candidate_mse, True)


def train(net: Network, batch, params: TrainParams) -> tuple[Network, TrainingTrace]:
    """Iterate epochs until an accepted MSE reaches the error goal or the
    epoch budget runs out.  Fully deterministic given (net, batch, params).
    """
    X_T = as_batch_arrays(batch, net)
    velocity = zero_gradients(net)
    learning_rate = params.learning_rate
    previous_mse: float | None = None
    records: list[EpochRecord] = []
    reason = StoppingReason.EPOCH_BUDGET_EXHAUSTED

    for epoch in range(1, params.max_epochs + 1):
        step = train_epoch(net, velocity, X_T, params, learning_rate, previous_mse)
        records.append(EpochRecord(epoch, step.mse, learning_rate, step.accepted))
        net, velocity, learning_rate = step.net, step.velocity, step.learning_rate
        previous_mse = step.mse
        if step.accepted and step.mse <= params.error_goal:
            reason = StoppingReason.GOAL_REACHED
            break

    return net, TrainingTrace(tuple(records), reason)


def validation_trace(trained: Network, holdout_batch, params: TrainParams) -> TrainingTrace:
    """Continue the training loop on a held-out batch from trained weights.

    Records the holdout error trajectory so callers can compare its minimum
    against the training error minimum.  Same update rule as training.
    """
    _, trace = train(trained, holdout_batch, params)
    return trace


def accuracy_from_mse(mse: float) -> float:
    """Accuracy percentage defined as 100 - MSE, floored at zero.

    This is a linear remapping of the error, not a classification rate; it
    is kept because the diagnostic reports express quality this way.
    """
    if not mse >= 0:
        raise ValueError(f"mse must be >= 0, got {mse!r}")
    return max(0.0, 100.0 - mse)


__all__ = [
    "TrainParams",
    "StoppingReason",
    "EpochRecord",
    "TrainingTrace",
    "EpochStep",
    "evaluate",
    "train_epoch",
    "train",
    "validation_trace",
    "accuracy_from_mse",
]
