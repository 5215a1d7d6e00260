"""Transfer functions for the diagnostic network.

The three kinds keep their classic toolbox names so that architecture
strings such as "4/logsig" read identically in configs, reports and
saved models: tansig (tanh shape, range (-1, 1)), logsig (logistic
sigmoid, range (0, 1)) and purelin (identity).
"""

from __future__ import annotations

from enum import Enum

import numpy as np


def tansig(x):
    """Tanh-shaped sigmoid, algebraically 2 / (1 + exp(-2x)) - 1."""
    return np.tanh(np.asarray(x, dtype=float))


def logsig(x):
    """Logistic sigmoid 1 / (1 + exp(-x)).

    exp() is only taken of non-positive arguments, so extreme inputs
    saturate cleanly instead of overflowing.
    """
    x = np.asarray(x, dtype=float)
    e = np.exp(-np.abs(x))
    out = np.where(x >= 0.0, 1.0 / (1.0 + e), e / (1.0 + e))
    return out[()]


def purelin(x):
    """Identity."""
    return np.asarray(x, dtype=float)[()]


def tansig_deriv(output):
    """Derivative of tansig written in terms of its output: 1 - o**2."""
    return 1.0 - np.square(output)


def logsig_deriv(output):
    """Derivative of logsig written in terms of its output: o * (1 - o)."""
    return output * (1.0 - output)


def purelin_deriv(output):
    return np.ones_like(output)


class Activation(Enum):
    """Supported transfer functions, keyed by their config-string names."""

    TANSIG = "tansig"
    LOGSIG = "logsig"
    PURELIN = "purelin"

    def apply(self, x):
        return _APPLY[self](x)

    def deriv_from_output(self, output):
        """Derivative evaluated from the activation output, not the input."""
        return _DERIV[self](output)


_APPLY = {
    Activation.TANSIG: tansig,
    Activation.LOGSIG: logsig,
    Activation.PURELIN: purelin,
}

_DERIV = {
    Activation.TANSIG: tansig_deriv,
    Activation.LOGSIG: logsig_deriv,
    Activation.PURELIN: purelin_deriv,
}
