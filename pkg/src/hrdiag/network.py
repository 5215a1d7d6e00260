"""Feedforward network state, evaluation, loss and analytic gradients.

Everything here is a pure function over immutable-by-convention values:
no operation mutates a :class:`Network` or :class:`Gradients` in place,
and identical inputs produce bit-identical outputs.  Batch reductions
use a fixed summation order, so results are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .activations import Activation


@dataclass(frozen=True)
class LayerSpec:
    """One layer: neuron count plus transfer function, e.g. 4/logsig."""

    neurons: int
    activation: Activation

    def __post_init__(self):
        if not isinstance(self.neurons, int) or self.neurons < 1:
            raise ValueError(f"layer needs at least 1 neuron, got {self.neurons!r}")

    @classmethod
    def parse(cls, text: str) -> "LayerSpec":
        """Parse a "<neurons>/<activation>" string such as "4/logsig"."""
        parts = text.strip().split("/")
        if len(parts) != 2:
            raise ValueError(f"bad layer spec {text!r}, expected '<neurons>/<activation>'")
        count, name = parts
        try:
            neurons = int(count)
        except ValueError:
            raise ValueError(f"bad neuron count in layer spec {text!r}") from None
        try:
            activation = Activation(name.strip().lower())
        except ValueError:
            names = ", ".join(a.value for a in Activation)
            raise ValueError(f"unknown activation {name!r}, expected one of: {names}") from None
        return cls(neurons, activation)

    @property
    def label(self) -> str:
        return f"{self.neurons}/{self.activation.value}"


@dataclass(frozen=True)
class NetworkConfig:
    """Layer specification: hidden layers followed by exactly one output layer."""

    input_dim: int
    layers: tuple[LayerSpec, ...]
    seed: int = 42

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        if not isinstance(self.input_dim, int) or self.input_dim < 1:
            raise ValueError(f"input_dim must be a positive integer, got {self.input_dim!r}")
        if len(self.layers) == 0:
            raise ValueError("need at least one layer (the output layer)")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed!r}")

    @property
    def output_dim(self) -> int:
        return self.layers[-1].neurons

    @property
    def label(self) -> str:
        """Human-readable architecture, e.g. "4/logsig + 1/tansig"."""
        return " + ".join(spec.label for spec in self.layers)

    def fan_ins(self) -> list[int]:
        """Input width of each layer; layer k consumes layer k-1 outputs."""
        return [self.input_dim] + [spec.neurons for spec in self.layers[:-1]]


@dataclass(eq=False)
class Network:
    """Realized weight state for a :class:`NetworkConfig`.

    ``weights[k]`` has shape (fan_out, fan_in) and ``biases[k]`` shape
    (fan_out,), with fan_in chaining from the previous layer.
    """

    config: NetworkConfig
    weights: list[np.ndarray]
    biases: list[np.ndarray]

    def __post_init__(self):
        fan_ins = self.config.fan_ins()
        if len(self.weights) != len(self.config.layers) or len(self.biases) != len(self.config.layers):
            raise ValueError("one weight matrix and one bias vector per layer required")
        for k, (W, b, spec) in enumerate(zip(self.weights, self.biases, self.config.layers)):
            if W.shape != (spec.neurons, fan_ins[k]):
                raise ValueError(
                    f"layer {k}: weight shape {W.shape} does not chain, "
                    f"expected {(spec.neurons, fan_ins[k])}"
                )
            if b.shape != (spec.neurons,):
                raise ValueError(f"layer {k}: bias shape {b.shape}, expected {(spec.neurons,)}")
            if not (np.isfinite(W).all() and np.isfinite(b).all()):
                raise ValueError(f"layer {k}: non-finite parameters")

    @property
    def output_dim(self) -> int:
        return self.config.output_dim


@dataclass(eq=False)
class Gradients:
    """Per-parameter partials of the batch MSE, shape-congruent with a Network."""

    weights: list[np.ndarray]
    biases: list[np.ndarray]

    def check_congruent(self, net: Network) -> None:
        ok = (
            len(self.weights) == len(net.weights)
            and len(self.biases) == len(net.biases)
            and all(g.shape == W.shape for g, W in zip(self.weights, net.weights))
            and all(g.shape == b.shape for g, b in zip(self.biases, net.biases))
        )
        if not ok:
            raise ValueError("gradients are not shape-congruent with the network")


def zero_gradients(net: Network) -> Gradients:
    """Gradients-shaped zeros, e.g. the initial momentum velocity."""
    return Gradients(
        [np.zeros_like(W) for W in net.weights],
        [np.zeros_like(b) for b in net.biases],
    )


def init_network(config: NetworkConfig) -> Network:
    """Create a network with weights and biases drawn uniformly from [-0.5, 0.5].

    The draw order is fixed (W then b, layer by layer) and the generator is
    seeded from ``config.seed``, so the same seed yields a bit-identical
    network.
    """
    rng = np.random.default_rng(config.seed)
    weights, biases = [], []
    for fan_in, spec in zip(config.fan_ins(), config.layers):
        weights.append(rng.uniform(-0.5, 0.5, size=(spec.neurons, fan_in)))
        biases.append(rng.uniform(-0.5, 0.5, size=spec.neurons))
    return Network(config, weights, biases)


def _forward_arrays(net: Network, X: np.ndarray) -> list[np.ndarray]:
    """All layer activations for a (n, input_dim) batch; entry 0 is X itself."""
    acts = [X]
    a = X
    for W, b, spec in zip(net.weights, net.biases, net.config.layers):
        a = spec.activation.apply(a @ W.T + b)
        acts.append(a)
    return acts


def forward(net: Network, x) -> tuple[np.ndarray, list[np.ndarray]]:
    """Evaluate the network on one input vector.

    Returns the output vector and the per-layer activation vectors (the
    last of which is the output itself).
    """
    x = np.asarray(x, dtype=float).ravel()
    if x.shape != (net.config.input_dim,):
        raise ValueError(f"input has length {x.size}, expected {net.config.input_dim}")
    if not np.isfinite(x).all():
        raise ValueError("input contains non-finite values")
    acts = _forward_arrays(net, x[np.newaxis, :])
    return acts[-1][0], [a[0] for a in acts[1:]]


def _mse(outputs: np.ndarray, targets: np.ndarray) -> float:
    return float(np.mean(np.square(outputs - targets)))


def compute_mse(outputs, targets) -> float:
    """Mean squared error over all patterns and all output components."""
    if len(outputs) != len(targets):
        raise ValueError(f"{len(outputs)} outputs vs {len(targets)} targets")
    if len(outputs) == 0:
        raise ValueError("empty batch")
    O = np.asarray([np.atleast_1d(np.asarray(o, dtype=float)) for o in outputs])
    T = np.asarray([np.atleast_1d(np.asarray(t, dtype=float)) for t in targets])
    if O.shape != T.shape:
        raise ValueError(f"output shape {O.shape} does not match target shape {T.shape}")
    return _mse(O, T)


def as_batch_arrays(batch, net: Network) -> tuple[np.ndarray, np.ndarray]:
    """Normalize a batch to (X, T) arrays of shape (n, in_dim) and (n, out_dim).

    Accepts either a pre-stacked (X, T) tuple or an iterable of
    (input, target) pairs; targets may be scalars for single-output nets.
    """
    if (
        isinstance(batch, tuple)
        and len(batch) == 2
        and isinstance(batch[0], np.ndarray)
        and isinstance(batch[1], np.ndarray)
    ):
        X, T = batch
    else:
        pairs = list(batch)
        if not pairs:
            raise ValueError("empty batch")
        X = np.asarray([np.asarray(x, dtype=float).ravel() for x, _ in pairs])
        T = np.asarray([np.atleast_1d(np.asarray(t, dtype=float)).ravel() for _, t in pairs])
    if X.ndim != 2 or T.ndim != 2 or X.shape[0] != T.shape[0]:
        raise ValueError(f"inconsistent batch shapes {X.shape} and {T.shape}")
    if X.shape[0] == 0:
        raise ValueError("empty batch")
    if X.shape[1] != net.config.input_dim:
        raise ValueError(f"batch inputs have width {X.shape[1]}, expected {net.config.input_dim}")
    if T.shape[1] != net.output_dim:
        raise ValueError(f"batch targets have width {T.shape[1]}, expected {net.output_dim}")
    if not (np.isfinite(X).all() and np.isfinite(T).all()):
        raise ValueError("batch contains non-finite values")
    return X, T


def backprop_gradients(net: Network, batch) -> tuple[Gradients, float]:
    """Gradients of the batch MSE for every weight and bias, plus that MSE.

    Standard backpropagation: the output-layer delta is the MSE derivative
    times the activation derivative (written in the activation output), and
    deltas chain backwards through the weight matrices.
    """
    X, T = as_batch_arrays(batch, net)
    acts = _forward_arrays(net, X)
    mse = _mse(acts[-1], T)

    layers = net.config.layers
    delta = (2.0 / T.size) * (acts[-1] - T) * layers[-1].activation.deriv_from_output(acts[-1])
    grad_w: list[np.ndarray] = []
    grad_b: list[np.ndarray] = []
    for k in range(len(layers) - 1, -1, -1):
        grad_w.append(delta.T @ acts[k])
        grad_b.append(delta.sum(axis=0))
        if k > 0:
            delta = (delta @ net.weights[k]) * layers[k - 1].activation.deriv_from_output(acts[k])

    grads = Gradients(grad_w[::-1], grad_b[::-1])
    grads.check_congruent(net)
    return grads, mse
