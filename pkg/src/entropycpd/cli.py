"""Command-line pipeline: simulate -> entropy -> detect -> evaluate, plus plot-data."""
from __future__ import annotations

import argparse
import sys

from . import io
from .detection import DetectorParams, detect_fluctuations
from .entropy import WindowParams
from .evaluation import match_and_score, render_table
from .simulation import GroundTruth, InvalidSpec, generate_series
from .sliding import entropy_sequence


class CLIError(Exception):
    pass


def _bins(value: str):
    if value.lower() == "auto":
        return "auto"
    try:
        k = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--bins must be an integer or 'auto', got {value!r}")
    if k < 2:
        raise argparse.ArgumentTypeError("--bins must be >= 2")
    return k


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return n


def cmd_simulate(args) -> None:
    specs = io.read_segment_specs(args.input)
    if not specs:
        raise CLIError(f"{args.input}: no segments")
    x, truth = generate_series(specs, args.seed)
    io.write_series_csv(args.output, x)
    io.write_json(args.truth, truth.to_dict())
    print(f"wrote {truth.total_length} samples, {len(truth.change_points)} change points")


def cmd_entropy(args) -> None:
    x = io.read_series_csv(args.input)
    params = WindowParams.from_bins(args.window, args.bins)
    if len(x) < params.delta:
        raise CLIError(f"series shorter than window ({len(x)} < {params.delta})")
    h = entropy_sequence(x, params)
    io.write_entropy_csv(args.output, h)
    print(f"wrote {len(h)} entropy values (window {params.delta}, {params.k} bins)")


def cmd_detect(args) -> None:
    h = io.read_entropy_csv(args.input)
    # the entropy file starts at t = window, so the window is recoverable
    delta = args.window if args.window is not None else h.offset
    if delta != h.offset:
        raise CLIError(f"--window {delta} does not match entropy file starting at t={h.offset}")
    params = DetectorParams(
        delta=delta,
        lam=args.lam,
        min_run=args.min_run,
        baseline_span=args.baseline_span,
        merge_gap=args.merge_gap,
        mad_floor=args.mad_floor,
    )
    events = detect_fluctuations(h, params)
    io.write_events_json(args.output, events, params.to_dict(), h.offset)
    print(f"detected {len(events)} events")


def cmd_evaluate(args) -> None:
    doc = io.read_json(args.truth)
    try:
        truth = GroundTruth.from_dict(doc)
    except (KeyError, TypeError, ValueError) as e:
        raise CLIError(f"{args.truth}: bad truth document: {e}")
    events, det_params = io.read_events_json(args.input)
    delta = args.window if args.window is not None else det_params.get("delta")
    if delta is None:
        raise CLIError("--window is required when the events file carries no parameters")
    params = {"window": int(delta), "detector": det_params}
    report = match_and_score(truth, events, int(delta), params=params)
    io.write_json(args.output, report.to_dict())
    table = render_table(report)
    if args.table:
        with open(args.table, "w") as fh:
            fh.write(table)
    sys.stdout.write(table)


def cmd_plot_data(args) -> None:
    x = io.read_series_csv(args.series)
    h = io.read_entropy_csv(args.entropy)
    io.write_joined_csv(args.output, x, h)
    print(f"wrote {len(x)} rows")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="entropycpd", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="generate a seeded multi-segment series")
    p.add_argument("--input", "--spec", dest="input", required=True, help="segment-spec JSON")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True, help="series CSV (t,value)")
    p.add_argument("--truth", required=True, help="ground-truth JSON")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("entropy", help="sliding-window normalized entropy")
    p.add_argument("--input", required=True, help="series CSV")
    p.add_argument("--window", type=_positive_int, default=100)
    p.add_argument("--bins", type=_bins, default="auto", help="integer or 'auto' (round(ln window))")
    p.add_argument("--output", required=True, help="entropy CSV (t,h_norm)")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("detect", help="detect entropy fluctuations")
    p.add_argument("--input", required=True, help="entropy CSV")
    p.add_argument("--window", type=_positive_int, default=None, help="defaults to the first t in the file")
    p.add_argument("--lambda", dest="lam", type=float, default=3.0)
    p.add_argument("--min-run", type=_positive_int, default=3)
    p.add_argument("--baseline-span", type=_positive_int, default=None)
    p.add_argument("--merge-gap", type=_positive_int, default=None)
    p.add_argument("--mad-floor", type=float, default=0.1)
    p.add_argument("--output", required=True, help="events JSON")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("evaluate", help="score events against ground truth")
    p.add_argument("--truth", required=True, help="ground-truth JSON")
    p.add_argument("--input", required=True, help="events JSON")
    p.add_argument("--window", type=_positive_int, default=None)
    p.add_argument("--output", required=True, help="report JSON")
    p.add_argument("--table", default=None, help="also write the rendered table here")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("plot-data", help="join series and entropy for plotting")
    p.add_argument("--series", "--input", dest="series", required=True)
    p.add_argument("--entropy", required=True)
    p.add_argument("--output", required=True, help="joined CSV (t,value,h_norm)")
    p.set_defaults(func=cmd_plot_data)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (CLIError, io.FormatError, InvalidSpec, ValueError, OSError) as e:
        print(f"entropycpd {args.command}: error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
