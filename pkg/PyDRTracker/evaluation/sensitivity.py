# PyDRTracker/evaluation/sensitivity.py

import logging
from typing import Iterable, Sequence

import pandas as pd

from ..config.tracker_config import TrackerConfig
from ..tracker.dr_tracker import DRTracker
from .ope_runner import TrackerFactory, run_ope

logger = logging.getLogger(__name__)

SWEEPABLE = ("theta", "mu", "num_distractors")


def parameter_sweep(
    config: TrackerConfig,
    sequences: Sequence,
    param: str,
    values: Iterable[float],
    workers: int = 1,
    tracker_factory: TrackerFactory = DRTracker,
) -> pd.DataFrame:
    """
    Vary one hyperparameter with everything else fixed.

    Args:
        config: Base configuration.
        sequences: Loaded sequences.
        param: One of theta, mu, num_distractors.
        values: Values to try, evaluated in the given order.
        workers: Worker threads per evaluation.
        tracker_factory: Builds a tracker from a config.

    Returns:
        DataFrame with columns value, precision_20, auc, fps.

    Raises:
        ValueError: If param cannot be swept.
        ConfigError: If a value is out of range for the parameter.

    Example:
        >>> parameter_sweep(config, sequences, "theta", [4, 8, 12, 16])
    """
    if param not in SWEEPABLE:
        raise ValueError(f"Cannot sweep '{param}'; choose from {', '.join(SWEEPABLE)}.")
    rows = []
    for value in values:
        variant = config.with_overrides(**{param: value})
        report = run_ope(variant, sequences, workers, tracker_factory)
        logger.info("Sweep %s=%s: precision@20=%.3f AUC=%.3f", param, value, report.mean_precision(), report.mean_auc())
        rows.append(
            {
                "value": getattr(variant, param),
                "precision_20": report.mean_precision(),
                "auc": report.mean_auc(),
                "fps": report.mean_fps(),
            }
        )
    return pd.DataFrame(rows)
