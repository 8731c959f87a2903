#!/usr/bin/env python3
"""Likert Reliability Toolkit.

Sample calls:
    # Reliability report (Cronbach alpha, respondent alpha, ICR variants) as JSON
    python -m reliability analyze responses.csv --scale 5

    # Same report as a one-row CSV written to a file
    python -m reliability analyze responses.csv --format csv --output report.csv

    # Pairwise Hellinger distances between items
    python -m reliability distances responses.csv --measure hellinger

    # Symmetrized KL with additive smoothing for items with unshared levels
    python -m reliability distances responses.csv --measure kl2 --smoothing 0.01

    # Per-item level frequencies and entropies
    python -m reliability profile responses.csv

    # Benchmark sweep at the default size (n=1000, p=50, K=5)
    python -m reliability simulate --seed 7 --output sweep.csv

    # Same sweep as JSON (per-fraction means, standard deviations, degenerate counts)
    python -m reliability simulate --format json --output sweep.json
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from reliability.errors import EXIT_DATA, EXIT_OK, EXIT_USAGE, ReliabilityError

logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage-error code instead of 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_fractions(value: str) -> tuple[float, ...]:
    """Parse "0.1,0.5,1" into a tuple of floats."""
    try:
        fractions = tuple(float(part) for part in value.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid fraction list: {value!r}") from None
    if not fractions:
        raise argparse.ArgumentTypeError("fraction list is empty")
    return fractions


def _delimiter(value: str) -> str:
    if value in ("\\t", "tab"):
        return "\t"
    if len(value) != 1:
        raise argparse.ArgumentTypeError(f"delimiter must be a single character, got {value!r}")
    return value


def _precision(value: str) -> int:
    try:
        digits = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid precision: {value!r}") from None
    if digits < 1:
        raise argparse.ArgumentTypeError(f"precision must be at least 1, got {digits}")
    return digits


def _common_parser() -> argparse.ArgumentParser:
    from reliability.core.exporter import DEFAULT_PRECISION, FORMATS

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--scale", "-K", type=int, default=5, metavar="K",
        help="Number of Likert levels; responses lie in 1..K (default: 5).",
    )
    common.add_argument(
        "--format", choices=FORMATS, default=None,
        help="Output format: 'analyze' report (default: json) or 'simulate' sweep (default: csv).",
    )
    common.add_argument(
        "--seed", type=int, default=None,
        help="Random seed for 'simulate'.",
    )
    common.add_argument(
        "--smoothing", type=float, default=0.0, metavar="EPS",
        help="Additive smoothing for KL-based distances (default: 0, no smoothing).",
    )
    common.add_argument(
        "--output", type=str, default=None, metavar="PATH",
        help="Output file (default: stdout; 'simulate' defaults to sweep.csv or sweep.json).",
    )
    common.add_argument(
        "--delimiter", type=_delimiter, default=",",
        help="CSV field separator for input and output (default: ',').",
    )
    common.add_argument(
        "--precision", type=_precision, default=DEFAULT_PRECISION,
        help=f"Significant digits of floating-point output (default: {DEFAULT_PRECISION}).",
    )
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="Debug logging.")
    verbosity.add_argument("--quiet", action="store_true", help="Warnings and errors only.")
    return common


def build_parser() -> argparse.ArgumentParser:
    from reliability.core.simulation import DEFAULT_SEED, SimConfig
    from reliability.measures import MeasureRegistry

    common = _common_parser()
    parser = _ArgumentParser(
        prog="reliability",
        description="Classical and information-theoretic reliability of Likert questionnaire data",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_ArgumentParser)
    sub.required = True

    analyze = sub.add_parser("analyze", parents=[common], help="Reliability report for a response matrix.")
    analyze.add_argument("input", metavar="INPUT", help="CSV file, one respondent per row.")
    analyze.add_argument(
        "--low_entropy_threshold", type=float, default=None, metavar="BITS",
        help="Entropy below which an item is listed as low-entropy (default: log2(K)/2).",
    )

    distances = sub.add_parser("distances", parents=[common], help="Pairwise item distance matrix as CSV.")
    distances.add_argument("input", metavar="INPUT", help="CSV file, one respondent per row.")
    distances.add_argument(
        "--measure", required=True,
        help="Item measure: " + "; ".join(f"{k} = {v}" for k, v in MeasureRegistry.describe().items()),
    )

    profile = sub.add_parser("profile", parents=[common], help="Per-item level frequencies and entropy.")
    profile.add_argument("input", metavar="INPUT", help="CSV file, one respondent per row.")

    defaults = SimConfig()
    simulate = sub.add_parser("simulate", parents=[common], help="Benchmark sweep over duplicated fractions.")
    simulate.add_argument("--n", type=int, default=defaults.n, help=f"Respondents (default: {defaults.n}).")
    simulate.add_argument("--p", type=int, default=defaults.p, help=f"Items (default: {defaults.p}).")
    simulate.add_argument(
        "--fractions", type=_parse_fractions, default=defaults.fractions,
        help="Comma-separated fractions in (0, 1] (default: 0.1,0.2,...,1.0).",
    )
    simulate.add_argument(
        "--replicates", type=int, default=defaults.replicates,
        help=f"Replicates per fraction (default: {defaults.replicates}).",
    )
    simulate.add_argument(
        "--plot_output", type=str, default=None, metavar="PATH",
        help="Tidy plot-data CSV (default: <output stem>_plot.csv).",
    )
    simulate.set_defaults(default_seed=DEFAULT_SEED)
    return parser


def _load(args):
    from reliability.core.response_matrix import LikertScale, read_csv

    return read_csv(args.input, LikertScale(args.scale), delimiter=args.delimiter)


def _cmd_analyze(args, exporter) -> int:
    from reliability.core.icr import reliability_report

    m = _load(args)
    report = reliability_report(m, low_entropy_threshold=args.low_entropy_threshold)
    text = exporter.export_report(report, args.output, fmt=args.format or "json")
    if args.output is None:
        sys.stdout.write(text)
    for note in report.notes:
        logger.info("Note: %s", note)
    return EXIT_OK


def _cmd_distances(args, exporter) -> int:
    from reliability.core.distances import distance_matrix
    from reliability.measures import MeasureRegistry

    measure = MeasureRegistry.create_measure(args.measure, {"smoothing": args.smoothing})
    m = _load(args)
    dm = distance_matrix(m, measure)
    text = exporter.export_distances(dm, args.output)
    if args.output is None:
        sys.stdout.write(text)
    if dm.na_count:
        codes = sorted(set(dm.errors.values()))
        print(
            f"warning: {dm.na_count} item pair(s) rendered as NA ({', '.join(codes)})",
            file=sys.stderr,
        )
    return EXIT_OK


def _cmd_profile(args, exporter) -> int:
    m = _load(args)
    text = exporter.export_profile(m, args.output)
    if args.output is None:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_simulate(args, exporter) -> int:
    from reliability.core.simulation import SimConfig, run_sweep

    cfg = SimConfig(
        n=args.n,
        p=args.p,
        K=args.scale,
        fractions=args.fractions,
        seed=args.seed if args.seed is not None else args.default_seed,
        replicates=args.replicates,
    )
    fmt = args.format or "csv"
    output = Path(args.output) if args.output else Path(f"sweep.{fmt}")
    plot_output = Path(args.plot_output) if args.plot_output else output.with_name(f"{output.stem}_plot.csv")

    def progress(done: int, total: int) -> None:
        logger.debug("Simulating: %d/%d", done, total)

    logger.info(
        "Sweep: n=%d p=%d K=%d, %d fraction(s) x %d replicate(s), seed %d",
        cfg.n, cfg.p, cfg.K, len(cfg.fractions), cfg.replicates, cfg.seed,
    )
    rows = run_sweep(cfg, progress_callback=progress)
    exporter.export_sweep(rows, output, plot_output, fmt=fmt)
    sys.stdout.write(exporter.format_sweep_table(rows))
    return EXIT_OK


_COMMANDS = {
    "analyze": _cmd_analyze,
    "distances": _cmd_distances,
    "profile": _cmd_profile,
    "simulate": _cmd_simulate,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s")

    from reliability.core.exporter import Exporter

    exporter = Exporter(precision=args.precision, delimiter=args.delimiter)
    try:
        return _COMMANDS[args.command](args, exporter)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA
    except ReliabilityError as e:
        if e.exit_code == EXIT_USAGE:
            parser.print_usage(sys.stderr)
        print(f"error: {e.code}: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
