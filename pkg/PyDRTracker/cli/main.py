# PyDRTracker/cli/main.py

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Union

from ..config.tracker_config import TrackerConfig, load_config
from ..data.result_writer import write_boxes
from ..data.sequence_loader import list_sequences, load_sequence
from ..evaluation.ablation_study import AblationStudy
from ..evaluation.ope_runner import run_ope, track_sequence
from ..evaluation.sensitivity import SWEEPABLE, parameter_sweep
from ..exceptions import CnTableError, ConfigError, SequenceFormatError
from ..tracker.dr_tracker import DRTracker
from ..utils.logging_config import configure_logging
from ..utils.markdown_utils import create_markdown_table_from_rows
from ..utils.name_sanitizer import sanitize_file_stem
from ..visualization.chart_generator import ChartGenerator
from ..visualization.overlay_renderer import save_overlay

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    """Bad command-line arguments."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_values(text: str) -> List[Union[int, float]]:
    values = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            values.append(int(item) if item.lstrip("+-").isdigit() else float(item))
        except ValueError as exc:
            raise UsageError(f"Cannot parse sweep value '{item}'.") from exc
    if not values:
        raise UsageError("--values needs at least one number.")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="drtrack", description="Distractor-repressing correlation filter tracker.")
    parser.add_argument("--log-level", default="INFO", help="Logging level (default: INFO).")
    parser.add_argument("--log-format", choices=("text", "json"), default="text", help="Log record format.")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    track = commands.add_parser("track", help="Track one sequence from its first groundtruth box.")
    track.add_argument("sequence", type=Path)
    track.add_argument("--overlay", action="store_true", help="Write per-frame images with the predicted box.")

    bench = commands.add_parser("bench", help="One-pass evaluation over every sequence of a dataset.")
    bench.add_argument("dataset", type=Path)
    bench.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    bench.add_argument("--plot", action="store_true", help="Also render precision and success charts.")

    ablate = commands.add_parser("ablate", help="Compare the full tracker against its component variants.")
    ablate.add_argument("dataset", type=Path)
    ablate.add_argument("--workers", type=int, default=os.cpu_count() or 1)

    sweep = commands.add_parser("sweep", help="Vary one hyperparameter with the others fixed.")
    sweep.add_argument("dataset", type=Path)
    sweep.add_argument("--param", choices=SWEEPABLE, required=True)
    sweep.add_argument("--values", required=True, help="Comma-separated values, e.g. 4,8,12,16.")
    sweep.add_argument("--workers", type=int, default=os.cpu_count() or 1)

    for sub in (track, bench, ablate, sweep):
        sub.add_argument("--config", type=Path, default=None, help="Flat YAML config file.")
        sub.add_argument("--out", type=Path, required=True, help="Output directory.")
        sub.add_argument("--no-dr", dest="no_dr", action="store_const", const=True, default=None,
                         help="Disable dynamic regression (distractor repression).")
        sub.add_argument("--no-ma", dest="no_ma", action="store_const", const=True, default=None,
                         help="Disable motion-aware search.")
    return parser


def _load_config(args: argparse.Namespace) -> TrackerConfig:
    if args.config is not None and not args.config.exists():
        raise FileNotFoundError(f"Config file not found: {args.config}")
    return load_config(args.config).with_overrides(no_dr=args.no_dr, no_ma=args.no_ma)


def _load_dataset(dataset: Path, config: TrackerConfig) -> list:
    return [
        load_sequence(path, config.img_subdir, config.groundtruth_name)
        for path in list_sequences(dataset, config.img_subdir)
    ]


def cmd_track(args: argparse.Namespace, config: TrackerConfig) -> int:
    sequence = load_sequence(args.sequence, config.img_subdir, config.groundtruth_name)
    record = track_sequence(DRTracker(config), sequence)

    args.out.mkdir(parents=True, exist_ok=True)
    stem = sanitize_file_stem(sequence.name)
    write_boxes(args.out / f"{stem}.txt", record.boxes)
    (args.out / f"{stem}_time.txt").write_text("".join(f"{t:.6f}\n" for t in record.times), encoding="utf-8")

    if args.overlay:
        overlay_dir = args.out / "overlay"
        overlay_dir.mkdir(exist_ok=True)
        for index, box in enumerate(record.boxes):
            save_overlay(sequence.load_frame(index), box, index + 1, overlay_dir / f"{index + 1:04d}.png")

    logger.info("Tracked %s: %d frames at %.1f fps", sequence.name, len(record.boxes), record.fps)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, config: TrackerConfig) -> int:
    report = run_ope(config, _load_dataset(args.dataset, config), workers=args.workers)
    report.write(args.out)
    if args.plot:
        charts = ChartGenerator({"DRTracker": report})
        charts.plot_precision(str(args.out / "precision.png"))
        charts.plot_success(str(args.out / "success.png"))
    print(report.generate())
    for name, error in report.failures.items():
        logger.error("Sequence %s failed: %s", name, error)
    return EXIT_OK


def cmd_ablate(args: argparse.Namespace, config: TrackerConfig) -> int:
    table = AblationStudy(config, _load_dataset(args.dataset, config), workers=args.workers).run()
    args.out.mkdir(parents=True, exist_ok=True)
    table.to_csv(args.out / "ablation.csv", index=False, float_format="%.6f")
    print(create_markdown_table_from_rows(table.to_dict("records"), list(table.columns)))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, config: TrackerConfig) -> int:
    values = _parse_values(args.values)
    table = parameter_sweep(config, _load_dataset(args.dataset, config), args.param, values, workers=args.workers)
    args.out.mkdir(parents=True, exist_ok=True)
    table.to_csv(args.out / f"sweep_{args.param}.csv", index=False, float_format="%.6f")
    print(create_markdown_table_from_rows(table.to_dict("records"), list(table.columns)))
    return EXIT_OK


COMMANDS = {"track": cmd_track, "bench": cmd_bench, "ablate": cmd_ablate, "sweep": cmd_sweep}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point of the `drtrack` console script.

    Returns:
        0 on success, 1 for usage or configuration errors, 2 for data errors
        (bad sequences, bad color-names table, missing paths), 3 otherwise.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        configure_logging(args.log_level, args.log_format)
    except ValueError as exc:
        print(f"drtrack: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        config = _load_config(args)
        return COMMANDS[args.command](args, config)
    except (UsageError, ConfigError) as exc:
        logger.error("%s", exc)
        return EXIT_USAGE
    except (SequenceFormatError, CnTableError, FileNotFoundError) as exc:
        logger.error("%s", exc)
        return EXIT_DATA
    except Exception:
        logger.exception("drtrack %s failed", args.command)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
