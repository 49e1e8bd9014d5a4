# PyDRTracker/evaluation/__init__.py

from .metrics import (
    Curve,
    PRECISION_THRESHOLDS,
    SUCCESS_THRESHOLDS,
    center_errors,
    overlaps,
    precision_curve,
    success_curve,
)
from .benchmark_report import BenchmarkReport
from .ope_runner import ResultRecord, SequenceResult, run_ope, track_sequence, evaluate_sequence
from .ablation_study import AblationStudy, ABLATION_VARIANTS
from .sensitivity import parameter_sweep, SWEEPABLE
