"""Architecture and hyperparameter grid harness.

Each grid row names a hidden-layer stack trained against the shared
single-neuron output layer; rows are trained once per seed and reported
with per-seed final training MSE plus mean/min statistics, because a
single unseeded run is not reproducible.  Test MSE is reported alongside
for honesty even though the grid ranks rows by training MSE.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, replace

from .activations import Activation
from .data import Dataset, as_training_batch
from .network import LayerSpec, NetworkConfig, init_network
from .training import StoppingReason, TrainParams, accuracy_from_mse, evaluate, train


@dataclass(frozen=True)
class GridRow:
    """One grid cell: hidden layers (possibly none) plus the training budget."""

    hidden_layers: tuple[LayerSpec, ...]
    epochs: int
    error_goal: float
    learning_rate: float

    def __post_init__(self):
        object.__setattr__(self, "hidden_layers", tuple(self.hidden_layers))
        if self.epochs < 0:
            raise ValueError("epochs must be >= 0")


@dataclass(frozen=True)
class SweepConfig:
    grid: tuple[GridRow, ...]
    seeds: tuple[int, ...]
    output_layer: LayerSpec = LayerSpec(1, Activation.TANSIG)

    def __post_init__(self):
        object.__setattr__(self, "grid", tuple(self.grid))
        object.__setattr__(self, "seeds", tuple(self.seeds))
        if not self.grid:
            raise ValueError("empty sweep grid")
        if not self.seeds:
            raise ValueError("no seeds given")


# The canonical 15-row grid: hidden stacks crossed with epoch budgets,
# every row at error goal 0.01 and learning rate 0.01.  An empty stack
# means the network is just the 1/tansig output layer.
_CANONICAL_FAMILIES: tuple[tuple[tuple[str, ...], tuple[int, ...]], ...] = (
    ((), (35, 40, 45, 50, 80, 400, 1000)),
    (("2/logsig",), (35, 100, 200, 500, 1000)),
    (("3/logsig",), (35, 1000)),
    (("4/logsig",), (1000,)),
)


def canonical_grid(seeds: tuple[int, ...] = (42,)) -> SweepConfig:
    """The standard 15-row grid over 1/tansig .. 4/logsig+1/tansig networks."""
    rows = []
    for hidden_specs, epoch_budgets in _CANONICAL_FAMILIES:
        hidden = tuple(LayerSpec.parse(s) for s in hidden_specs)
        for epochs in epoch_budgets:
            rows.append(GridRow(hidden, epochs, error_goal=0.01, learning_rate=0.01))
    return SweepConfig(tuple(rows), tuple(seeds))


@dataclass(frozen=True)
class SweepRow:
    """Results of one grid row across all seeds.

    Per-seed entries are None where that seed's training failed; the
    matching error message sits in ``errors``.
    """

    label: str
    epochs: int
    error_goal: float
    learning_rate: float
    seeds: tuple[int, ...]
    train_mse: tuple[float | None, ...]
    test_mse: tuple[float | None, ...]
    stopping_reasons: tuple[str | None, ...]
    errors: tuple[str | None, ...]

    @property
    def failed(self) -> bool:
        return all(m is None for m in self.train_mse)

    @property
    def mean_mse(self) -> float | None:
        ok = [m for m in self.train_mse if m is not None]
        return sum(ok) / len(ok) if ok else None

    @property
    def min_mse(self) -> float | None:
        ok = [m for m in self.train_mse if m is not None]
        return min(ok) if ok else None

    @property
    def mean_test_mse(self) -> float | None:
        ok = [m for m in self.test_mse if m is not None]
        return sum(ok) / len(ok) if ok else None

    @property
    def goal_reached_count(self) -> int:
        return sum(1 for r in self.stopping_reasons if r == StoppingReason.GOAL_REACHED.value)


def run_sweep(config: SweepConfig, data: Dataset, params_base: TrainParams) -> list[SweepRow]:
    """Train every grid row for every seed on the dataset's training split.

    Rows come back in grid order; a failing seed marks its entry failed
    without aborting the sweep.  Deterministic given (config, data, seeds).
    """
    train_batch = as_training_batch(data.training)
    test_batch = as_training_batch(data.testing) if data.testing else None

    rows: list[SweepRow] = []
    for cell in config.grid:
        layers = cell.hidden_layers + (config.output_layer,)
        label = " + ".join(spec.label for spec in layers)
        params = replace(
            params_base,
            learning_rate=cell.learning_rate,
            error_goal=cell.error_goal,
            max_epochs=cell.epochs,
        )
        mses: list[float | None] = []
        test_mses: list[float | None] = []
        reasons: list[str | None] = []
        errors: list[str | None] = []
        for seed in config.seeds:
            try:
                net = init_network(NetworkConfig(3, layers, seed=seed))
                trained, trace = train(net, train_batch, params)
                final = trace.final_mse if trace.records else evaluate(trained, train_batch)
                mses.append(final)
                test_mses.append(evaluate(trained, test_batch) if test_batch else None)
                reasons.append(trace.stopping_reason.value)
                errors.append(None)
            except Exception as exc:  # noqa: BLE001 - row failures must not kill the sweep
                mses.append(None)
                test_mses.append(None)
                reasons.append(None)
                errors.append(str(exc))
        rows.append(
            SweepRow(
                label, cell.epochs, cell.error_goal, cell.learning_rate,
                config.seeds, tuple(mses), tuple(test_mses), tuple(reasons), tuple(errors),
            )
        )
    return rows


def _fmt(value: float | None, spec: str) -> str:
    return format(value, spec) if value is not None else "-"


def render_table(rows: list[SweepRow]) -> str:
    """Fixed-width text table: one header line plus one line per row."""
    if not rows:
        raise ValueError("no sweep rows to render")
    headers = ("configuration", "epochs", "goal", "lr", "mse mean", "mse min",
               "test mse", "accuracy %", "goal hit")
    cells = []
    for r in rows:
        if r.failed:
            cells.append((r.label, str(r.epochs), f"{r.error_goal:g}", f"{r.learning_rate:g}",
                          "failed", "-", "-", "-", "-"))
            continue
        acc = accuracy_from_mse(r.mean_mse)
        cells.append((
            r.label,
            str(r.epochs),
            f"{r.error_goal:g}",
            f"{r.learning_rate:g}",
            _fmt(r.mean_mse, ".6f"),
            _fmt(r.min_mse, ".6f"),
            _fmt(r.mean_test_mse, ".6f"),
            f"{acc:.2f}",
            f"{r.goal_reached_count}/{len(r.seeds)}",
        ))
    widths = [max(len(h), *(len(row[i]) for row in cells)) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in cells:
        padded = [row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]
        lines.append("  ".join(padded).rstrip())
    return "\n".join(lines)


def render_csv(rows: list[SweepRow]) -> str:
    """CSV rendering with round-trip-exact numbers and per-seed detail."""
    if not rows:
        raise ValueError("no sweep rows to render")
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow([
        "configuration", "epochs", "error_goal", "learning_rate",
        "mse_mean", "mse_min", "test_mse_mean", "accuracy",
        "seeds", "mse_per_seed", "test_mse_per_seed", "stopping_reasons", "errors",
    ])
    for r in rows:
        acc = accuracy_from_mse(r.mean_mse) if r.mean_mse is not None else None
        writer.writerow([
            r.label,
            r.epochs,
            repr(r.error_goal),
            repr(r.learning_rate),
            repr(r.mean_mse) if r.mean_mse is not None else "",
            repr(r.min_mse) if r.min_mse is not None else "",
            repr(r.mean_test_mse) if r.mean_test_mse is not None else "",
            repr(acc) if acc is not None else "",
            ";".join(str(s) for s in r.seeds),
            ";".join(repr(m) if m is not None else "" for m in r.train_mse),
            ";".join(repr(m) if m is not None else "" for m in r.test_mse),
            ";".join(s if s is not None else "" for s in r.stopping_reasons),
            ";".join(e if e is not None else "" for e in r.errors),
        ])
    return buf.getvalue()
