"""Command-line surface: train, eval, sweep, predict and score.

All commands are deterministic given their flags (the seed is a flag,
default 42).  Reports that rest on surrogate targets say so on a
dedicated caveat line, since no published outcome labels exist for the
bundled survey data.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from .data import (
    CSV_COLUMNS,
    CSV_TARGET_COLUMN,
    Dataset,
    aggregate_questionnaire,
    as_training_batch,
    assign_surrogate_targets,
    load_csv,
    load_embedded,
    load_questionnaire_csv,
    normalize,
    split_70_30,
)
from .model_io import (
    SurrogateRule,
    diagnose,
    load_model,
    model_from_training,
    save_model,
)
from .network import LayerSpec, NetworkConfig, _forward_arrays, init_network
from .sweep import canonical_grid, render_csv, render_table, run_sweep
from .tables import FACTOR_GROUPS
from .training import TrainParams, accuracy_from_mse, evaluate, train, validation_trace

SURROGATE_CAVEAT = (
    "note: targets are surrogate labels (threshold rule on raw factor means), "
    "not observed outcomes"
)


def _say(args, text: str = "") -> None:
    if not args.quiet:
        print(text)


def _parse_hidden(text: str) -> tuple[LayerSpec, ...]:
    text = text.strip()
    if text.lower() in ("", "none"):
        return ()
    return tuple(LayerSpec.parse(part) for part in text.split(","))


def _parse_seeds(text: str) -> tuple[int, ...]:
    """Seed list syntax: '7', '1,2,5' or an inclusive range '1..10'."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        start, stop = int(lo), int(hi)
        if stop < start:
            raise ValueError(f"bad seed range {text!r}")
        return tuple(range(start, stop + 1))
    return tuple(int(part) for part in text.split(","))


def _csv_has_targets(path: str | Path) -> bool:
    with Path(path).open(newline="", encoding="utf-8") as fh:
        header = next(csv.reader(fh), None)
    if header is None:
        raise ValueError(f"{path}: empty file")
    cols = tuple(h.strip() for h in header)
    if cols == CSV_COLUMNS:
        return False
    if cols == CSV_COLUMNS + (CSV_TARGET_COLUMN,):
        return True
    raise ValueError(
        f"{path}: bad header {','.join(cols)!r}, expected "
        f"{','.join(CSV_COLUMNS)} or {','.join(CSV_COLUMNS + (CSV_TARGET_COLUMN,))}"
    )


def _require_one_source(args) -> None:
    if args.embedded and args.data:
        raise ValueError("pass either --embedded or --data, not both")
    if not args.embedded and not args.data:
        raise ValueError("no data source: pass --embedded or --data <csv>")


def _load_training_data(args) -> tuple[Dataset, bool]:
    """Training-ready dataset (normalized, targeted) plus a surrogate flag."""
    _require_one_source(args)
    if args.embedded:
        raw = load_embedded()
        training = assign_surrogate_targets(raw.training, args.threshold)
        testing = assign_surrogate_targets(raw.testing, args.threshold)
        used_surrogate = True
    else:
        has_targets = _csv_has_targets(args.data)
        patterns = load_csv(args.data, has_targets)
        used_surrogate = not has_targets
        if used_surrogate:
            patterns = assign_surrogate_targets(patterns, args.threshold)
        if getattr(args, "split", False):
            training, testing = split_70_30(patterns, args.seed)
        else:
            training, testing = patterns, []
    training_n, nmap = normalize(training)
    testing_n, _ = normalize(testing)
    return Dataset(training_n, testing_n, nmap), used_surrogate


def cmd_train(args) -> int:
    dataset, used_surrogate = _load_training_data(args)
    batch = as_training_batch(dataset.training)

    layers = _parse_hidden(args.hidden) + (LayerSpec.parse(args.output_layer),)
    config = NetworkConfig(3, layers, seed=args.seed)
    params = TrainParams(
        learning_rate=args.lr,
        momentum=args.momentum,
        error_goal=args.goal,
        max_epochs=args.epochs,
        lr_increase=args.lr_increase,
        lr_decrease=args.lr_decrease,
        max_error_ratio=args.max_error_ratio,
        adaptive=not args.no_adaptive,
    )
    net = init_network(config)
    trained, trace = train(net, batch, params)
    final_mse = evaluate(trained, batch)
    if not np.isfinite(final_mse):
        raise ValueError("training diverged to a non-finite MSE")

    _say(args, f"architecture: {config.label} (seed {args.seed})")
    _say(args, f"training patterns: {len(batch)}")
    if args.epochs == 0:
        _say(args, "zero-epoch run: model keeps its initial random weights")
    _say(args, f"epochs run: {len(trace.records)} ({trace.stopping_reason.value})")
    _say(args, f"final training MSE: {final_mse:.6f}")
    _say(args, f"accuracy (100 - MSE): {accuracy_from_mse(final_mse):.6f}")
    if used_surrogate:
        _say(args, SURROGATE_CAVEAT)

    if args.model_out:
        rule = SurrogateRule(args.threshold) if used_surrogate else None
        model = model_from_training(trained, dataset.normalization, params, final_mse, rule)
        save_model(model, args.model_out)
        _say(args, f"model written to {args.model_out}")
    return 0


def _load_eval_patterns(args, model) -> tuple[list, bool]:
    """Raw-coordinate, targeted patterns for evaluation plus a surrogate flag."""
    _require_one_source(args)
    if args.embedded:
        raw = load_embedded()
        selected = raw.training if args.split == "train" else raw.testing
        threshold = model.surrogate_rule.threshold if model.surrogate_rule else args.threshold
        return assign_surrogate_targets(selected, threshold), True
    if not _csv_has_targets(args.data):
        raise ValueError(f"{args.data}: targets required for evaluation")
    return load_csv(args.data, has_targets=True), False


def cmd_eval(args) -> int:
    model = load_model(args.model)
    net = model.network()
    patterns, used_surrogate = _load_eval_patterns(args, model)
    if model.normalization is not None:
        patterns = [model.normalization.apply_pattern(p) for p in patterns]
    batch = as_training_batch(patterns)

    mse = evaluate(net, batch)
    X = np.asarray([x for x, _ in batch])
    outputs = _forward_arrays(net, X)[-1][:, 0]
    labels = np.asarray([t[0] >= 0 for _, t in batch])
    preds = outputs >= 0
    true_success = int(np.sum(preds & labels))
    true_failure = int(np.sum(~preds & ~labels))
    false_success = int(np.sum(preds & ~labels))
    false_failure = int(np.sum(~preds & labels))

    _say(args, f"evaluation patterns: {len(batch)} ({args.split if args.embedded else args.data})")
    _say(args, f"test MSE: {mse:.6f}")
    _say(args, f"accuracy (100 - MSE): {accuracy_from_mse(mse):.6f}")
    _say(args, f"confusion vs {'surrogate' if used_surrogate else 'provided'} labels: "
               f"true success {true_success}, true failure {true_failure}, "
               f"false success {false_success}, false failure {false_failure}")
    if used_surrogate:
        _say(args, SURROGATE_CAVEAT)

    if args.paper_validation:
        trace = validation_trace(net, batch, model.train_params)
        _say(args, "validation trajectory (training continued on this data):")
        for line in trace.error_lines():
            _say(args, line)
    return 0


def cmd_sweep(args) -> int:
    if not args.embedded and not args.data:
        args.embedded = True  # the canonical sweep runs on the bundled data
    dataset, used_surrogate = _load_training_data(args)
    seeds = _parse_seeds(args.seeds) if args.seeds else (args.seed,)
    config = canonical_grid(seeds)
    params_base = TrainParams(momentum=args.momentum, adaptive=not args.no_adaptive)
    rows = run_sweep(config, dataset, params_base)
    _say(args, render_table(rows))
    if used_surrogate:
        _say(args, SURROGATE_CAVEAT)
    if args.csv:
        Path(args.csv).write_text(render_csv(rows), encoding="utf-8")
        _say(args, f"csv written to {args.csv}")
    return 0


def cmd_predict(args) -> int:
    model = load_model(args.model)
    if (args.values is None) == (args.questionnaire is None):
        raise ValueError("pass either three comma-separated values or --questionnaire <csv>")
    if args.questionnaire:
        pattern = aggregate_questionnaire(load_questionnaire_csv(args.questionnaire))
        values = pattern.inputs
        _say(args, f"aggregates: x1={values[0]:.3f} x2={values[1]:.3f} x3={values[2]:.3f}")
    else:
        parts = args.values.split(",")
        if len(parts) != model.config.input_dim:
            raise ValueError(
                f"expected {model.config.input_dim} comma-separated values, got {len(parts)}"
            )
        try:
            values = tuple(float(p) for p in parts)
        except ValueError:
            raise ValueError(f"malformed input values {args.values!r}") from None

    d = diagnose(model, values)
    _say(args, f"label: {d.label.value}")
    _say(args, f"raw output: {d.raw_output:.6f}")
    _say(args, f"model training MSE: {d.train_mse:.6f}")
    _say(args, f"accuracy (100 - MSE): {d.accuracy:.6f}")
    if d.surrogate:
        _say(args, SURROGATE_CAVEAT)
    return 0


def cmd_score(args) -> int:
    resp = load_questionnaire_csv(args.questionnaire)
    pattern = aggregate_questionnaire(resp)
    _say(args, f"x1={pattern.strategic:.3f} x2={pattern.tactical:.3f} x3={pattern.operational:.3f}")
    _say(args)
    width = max(len(f) for factors in FACTOR_GROUPS.values() for f in factors)
    for group, factors in FACTOR_GROUPS.items():
        _say(args, f"{group} factors (mean {resp.group_mean(group):.3f}):")
        for factor in factors:
            _say(args, f"  {factor.ljust(width)}  {resp.scores[factor]:g}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hrdiag",
        description="Train, sweep and apply the HR success/failure diagnostic network.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=42, help="deterministic seed (default 42)")
    common.add_argument("--quiet", action="store_true", help="suppress non-error output")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--embedded", action="store_true", help="use the bundled survey tables")
    source.add_argument("--data", metavar="CSV", help="load patterns from a CSV file")
    source.add_argument(
        "--threshold", type=float, default=2.5,
        help="surrogate success threshold on raw factor means (default 2.5)",
    )

    p = sub.add_parser("train", parents=[common, source], help="train a diagnostic model")
    p.add_argument("--hidden", default="4/logsig",
                   help="comma-separated hidden layers, e.g. '4/logsig' or 'none' (default 4/logsig)")
    p.add_argument("--output-layer", default="1/tansig", help="output layer spec (default 1/tansig)")
    p.add_argument("--epochs", type=int, default=1000, help="epoch budget (default 1000)")
    p.add_argument("--lr", type=float, default=0.01, help="initial learning rate (default 0.01)")
    p.add_argument("--goal", type=float, default=0.01, help="error goal (default 0.01)")
    p.add_argument("--momentum", type=float, default=0.9, help="momentum (default 0.9)")
    p.add_argument("--no-adaptive", action="store_true", help="disable the adaptive learning rate")
    p.add_argument("--lr-increase", type=float, default=1.05)
    p.add_argument("--lr-decrease", type=float, default=0.7)
    p.add_argument("--max-error-ratio", type=float, default=1.04)
    p.add_argument("--split", action="store_true",
                   help="apply the seeded 70/30 split to --data and train on the 70%%")
    p.add_argument("-o", "--model-out", metavar="PATH", help="write the trained model as JSON")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("eval", parents=[common, source], help="evaluate a saved model")
    p.add_argument("model", help="model JSON path")
    p.add_argument("--split", choices=("train", "test"), default="test",
                   help="which bundled split to evaluate (default test)")
    p.add_argument("--paper-validation", action="store_true",
                   help="continue training on the evaluation data and print the "
                        "'error=... no.of epoches=...' trajectory")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep", parents=[common, source],
                       help="run the canonical 15-row architecture grid")
    p.add_argument("--seeds", metavar="SPEC",
                   help="seed list, e.g. '1..10' or '3,5,8' (default: the --seed value)")
    p.add_argument("--momentum", type=float, default=0.9)
    p.add_argument("--no-adaptive", action="store_true")
    p.add_argument("--csv", metavar="PATH", help="also write the table as CSV")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("predict", parents=[common], help="diagnose one respondent")
    p.add_argument("model", help="model JSON path")
    p.add_argument("values", nargs="?",
                   help="three comma-separated raw aggregates, e.g. '3.5,2.0,4.0'")
    p.add_argument("--questionnaire", metavar="CSV", help="score a factor_id,score questionnaire")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("score", parents=[common],
                       help="aggregate a questionnaire to (x1, x2, x3)")
    p.add_argument("questionnaire", help="CSV with header factor_id,score")
    p.set_defaults(func=cmd_score)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
