"""Main entry point for the thermal comfort control experiments."""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import NoReturn

from .application.experiments import Experiment, ExperimentRunner
from .domain.exceptions import ThermalComfortError
from .infrastructure.config import OUTPUT_FORMATS, Config, load_config
from .infrastructure.export import ArtifactWriter
from .infrastructure.logging import LoggerSetup, ProgressTracker, get_logger, log_timing
from .utils.path_utils import create_artifact_filename

COMMANDS: dict[str, str] = {
    "band": "Solve and print the comfort band (optionally write the h staircase)",
    "curves": "Emit signed/absolute discomfort and signal samples per occupant",
    "signals": "Emit the aggregate signal h and dissatisfied count g staircases",
    "sweep": "Emit band and discomfort figures across the tolerance grid",
    "simulate": "Run the closed-loop scenario and emit its trace",
    "setpoint": "Emit optimal setpoint, power and discomfort per outdoor temperature",
}


def build_parser() -> argparse.ArgumentParser:
    """Build the command line parser with one subcommand per experiment."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        type=Path,
        required=True,
        metavar="PATH",
        help="Scenario YAML document",
    )
    common.add_argument(
        "--out",
        type=Path,
        metavar="PATH",
        help="Artifact path (default: <output.directory>/<command>.<format>)",
    )
    common.add_argument(
        "--seed",
        type=int,
        metavar="INT",
        help="Outdoor profile seed (overrides the scenario)",
    )
    common.add_argument(
        "--delta",
        type=float,
        metavar="FLOAT",
        help="Common comfort tolerance applied to every occupant",
    )
    common.add_argument(
        "--format",
        choices=OUTPUT_FORMATS,
        help="Artifact format (overrides the scenario)",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Enable verbose output with debug logs",
    )
    common.add_argument(
        "--log-dir",
        type=Path,
        default=Path("logs"),
        metavar="PATH",
        help="Directory for the debug log file (default: ./logs)",
    )
    common.add_argument(
        "--no-log-file",
        action="store_true",
        help="Log to the console only",
    )

    parser = argparse.ArgumentParser(
        prog="thermal-comfort-control",
        description="Occupant-feedback comfort bands, setpoints and closed-loop HVAC simulation",
        epilog="""
Examples:
  # Comfort band with a common tolerance of 1.5 °C
  python main.py band --config resources/office_week.yaml --delta 1.5

  # Tolerance sweep as CSV
  python main.py sweep --config resources/office_week.yaml --out sweep.csv

  # Weekly simulation with a fixed seed, as JSON
  python main.py simulate --config resources/office_week.yaml --seed 42 --format json

  # Setpoint table with debug logs
  python main.py setpoint --config resources/office_week.yaml --verbose
        """,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, help_text in COMMANDS.items():
        subparsers.add_parser(name, parents=[common], help=help_text, description=help_text)
    return parser


def _run_experiment(runner: ExperimentRunner, args: argparse.Namespace) -> Experiment:
    dispatch: dict[str, Callable[[], Experiment]] = {
        "band": lambda: runner.band(args.delta),
        "curves": lambda: runner.curves(args.delta),
        "signals": lambda: runner.signals(args.delta),
        "sweep": runner.sweep,
        "simulate": lambda: runner.simulate(seed=args.seed, delta=args.delta),
        "setpoint": lambda: runner.setpoint(args.delta),
    }
    return dispatch[args.command]()


def _artifact_qualifiers(args: argparse.Namespace) -> dict[str, float | int | None]:
    return {
        "delta": None if args.command == "sweep" else args.delta,
        "seed": args.seed if args.command == "simulate" else None,
    }


def _report_failure(logger: logging.Logger, message: str) -> int:
    logger.error(message)
    log_file = LoggerSetup.get_log_file_path()
    if log_file is not None:
        logger.error(f"Details in {log_file}")
    return 1


def run_command(argv: Sequence[str] | None = None) -> int:
    """
    Parse ``argv``, run one experiment and write its artifact.

    Returns:
        0 when every requested artifact was written, 2 on usage errors and
        1 on invalid scenarios, numerical failures or I/O failures
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code is None else int(e.code)

    config = Config.from_args(
        verbose=args.verbose,
        log_dir=args.log_dir,
        log_file=not args.no_log_file,
        fmt=args.format,
    )
    LoggerSetup.initialize(config.log_dir, verbose=config.verbose)
    logger = get_logger(__name__)
    logger.debug(f"Command: {args.command}, scenario: {args.config}")

    try:
        scenario = load_config(args.config)
        config = config.with_output(scenario.output)
        config.validate()

        if args.command == "sweep" and args.delta is not None:
            logger.warning("--delta is ignored by sweep; the grid comes from the scenario")

        tracker = ProgressTracker(logger)
        experiment = _run_experiment(ExperimentRunner(scenario, tracker), args)
        if args.seed is not None and experiment.meta.get("seed") is None:
            experiment.meta["seed"] = args.seed
    except ThermalComfortError as e:
        return _report_failure(logger, f"{type(e).__name__}: {e}")
    except OSError as e:
        return _report_failure(logger, f"Could not read {args.config}: {e}")

    if args.command == "band" and experiment.band is not None:
        print(f"{experiment.band.t_min:.6g} {experiment.band.t_max:.6g}")
        if args.out is None:
            tracker.report_summary()
            return 0

    assert config.output_dir is not None and config.format is not None
    path = args.out or config.output_dir / create_artifact_filename(
        args.command, config.format, _artifact_qualifiers(args)
    )
    try:
        ArtifactWriter(config.format).write(experiment.frame, path, experiment.meta)
    except OSError as e:
        return _report_failure(logger, f"Could not write {path}: {e}")

    tracker.report_summary()
    return 0


@log_timing
def main() -> NoReturn:
    """Main entry point for the command line tool."""
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
