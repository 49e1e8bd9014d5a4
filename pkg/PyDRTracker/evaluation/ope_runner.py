# PyDRTracker/evaluation/ope_runner.py

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, FrozenSet, List, Optional, Sequence

from ..config.tracker_config import TrackerConfig
from ..core.bbox import BBox
from ..tracker.dr_tracker import DRTracker
from .benchmark_report import BenchmarkReport
from .metrics import Curve, summarize

logger = logging.getLogger(__name__)

TrackerFactory = Callable[[TrackerConfig], object]


@dataclass
class ResultRecord:
    """
    Per-frame output of one tracking run.

    times[i] is the tracker compute time of frame i in seconds, frame decode
    excluded. zero_response_frames lists 1-based frame indices whose
    response had no positive value.
    """

    boxes: List[BBox] = field(default_factory=list)
    times: List[float] = field(default_factory=list)
    zero_response_frames: List[int] = field(default_factory=list)

    @property
    def fps(self) -> float:
        total = sum(self.times)
        return len(self.times) / total if total > 0 else 0.0


@dataclass
class SequenceResult:
    """Scores of one sequence, or the error that stopped it."""

    name: str
    attributes: FrozenSet[str] = frozenset()
    record: Optional[ResultRecord] = None
    precision: Optional[Curve] = None
    success: Optional[Curve] = None
    precision_20: float = float("nan")
    auc: float = float("nan")
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None

    @property
    def fps(self) -> float:
        return self.record.fps if self.record is not None else float("nan")


def track_sequence(tracker, sequence) -> ResultRecord:
    """
    Run a tracker over a sequence from its first groundtruth box, no resets.

    Args:
        tracker: Object with `init(frame, bbox) -> state` and
            `track(state, frame) -> BBox`.
        sequence: Object with `name`, `groundtruth`, `__len__` and `load_frame(i)`.
    """
    record = ResultRecord()
    first_box = sequence.groundtruth[0]
    frame = sequence.load_frame(0)
    start = time.perf_counter()
    state = tracker.init(frame, first_box)
    record.times.append(time.perf_counter() - start)
    record.boxes.append(first_box)

    for index in range(1, len(sequence)):
        frame = sequence.load_frame(index)
        start = time.perf_counter()
        box = tracker.track(state, frame)
        record.times.append(time.perf_counter() - start)
        record.boxes.append(box)

    record.zero_response_frames = list(getattr(state, "zero_response_frames", []))
    return record


def evaluate_sequence(
    config: TrackerConfig,
    sequence,
    tracker_factory: TrackerFactory = DRTracker,
) -> SequenceResult:
    """Track and score one sequence; any failure is captured in the result."""
    result = SequenceResult(name=sequence.name, attributes=frozenset(getattr(sequence, "attributes", ())))
    try:
        record = track_sequence(tracker_factory(config), sequence)
        precision, success, precision_20, auc = summarize(
            record.boxes, sequence.groundtruth, config.precision_strict, config.success_strict
        )
    except Exception as exc:
        logger.exception("Sequence %s failed", sequence.name)
        result.error = f"{type(exc).__name__}: {exc}"
        return result

    result.record = record
    result.precision = precision
    result.success = success
    result.precision_20 = precision_20
    result.auc = auc
    logger.info(
        "Sequence %s: precision@20=%.3f AUC=%.3f fps=%.1f",
        sequence.name, precision_20, auc, record.fps,
        extra={"sequence": sequence.name, "precision_20": precision_20, "auc": auc, "fps": record.fps},
    )
    return result


def run_ope(
    config: TrackerConfig,
    sequences: Sequence,
    workers: int = 1,
    tracker_factory: TrackerFactory = DRTracker,
) -> BenchmarkReport:
    """
    One-pass evaluation over several sequences.

    Sequences are independent and run on a thread pool when workers > 1;
    results are ordered by sequence name whatever the completion order.

    Args:
        config: Tracker configuration shared by every sequence.
        sequences: Loaded sequences.
        workers: Number of worker threads.
        tracker_factory: Builds a tracker from the config.

    Returns:
        BenchmarkReport with one row per sequence plus the mean.
    """
    if workers > 1 and len(sequences) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda seq: evaluate_sequence(config, seq, tracker_factory), sequences))
    else:
        results = [evaluate_sequence(config, seq, tracker_factory) for seq in sequences]
    return BenchmarkReport(sorted(results, key=lambda result: result.name))
