# PyDRTracker/evaluation/ablation_study.py

import logging
from typing import Dict, List, Sequence

import pandas as pd

from ..config.tracker_config import TrackerConfig
from ..tracker.dr_tracker import DRTracker
from .ope_runner import TrackerFactory, run_ope

logger = logging.getLogger(__name__)

# "-DR" applies dynamic regression only, "-MA" motion-aware search only.
ABLATION_VARIANTS: Dict[str, Dict[str, bool]] = {
    "full": {"no_dr": False, "no_ma": False},
    "-DR": {"no_dr": False, "no_ma": True},
    "-MA": {"no_dr": True, "no_ma": False},
    "baseline": {"no_dr": True, "no_ma": True},
}


class AblationStudy:
    def __init__(
        self,
        config: TrackerConfig,
        sequences: Sequence,
        workers: int = 1,
        tracker_factory: TrackerFactory = DRTracker,
    ):
        """
        Compare the tracker with its components switched on and off.

        Args:
            config: Base configuration; its no_dr / no_ma values are overridden per variant.
            sequences: Loaded sequences evaluated by every variant.
            workers: Worker threads per evaluation.
            tracker_factory: Builds a tracker from a config.
        """
        self.config = config
        self.sequences = sequences
        self.workers = workers
        self.tracker_factory = tracker_factory

    def run_variant(self, label: str) -> Dict[str, object]:
        """
        Evaluate one named variant.

        Returns:
            Dictionary with the variant label, its toggles and the mean scores.

        Raises:
            ValueError: If the label is not a known variant.
        """
        if label not in ABLATION_VARIANTS:
            raise ValueError(f"Unknown ablation variant '{label}'; choose from {list(ABLATION_VARIANTS)}.")
        toggles = ABLATION_VARIANTS[label]
        report = run_ope(self.config.with_overrides(**toggles), self.sequences, self.workers, self.tracker_factory)
        logger.info("Ablation %s: precision@20=%.3f AUC=%.3f", label, report.mean_precision(), report.mean_auc())
        return {
            "variant": label,
            "dynamic_regression": not toggles["no_dr"],
            "motion_aware": not toggles["no_ma"],
            "precision_20": report.mean_precision(),
            "auc": report.mean_auc(),
            "fps": report.mean_fps(),
        }

    def run(self, labels: List[str] = None) -> pd.DataFrame:
        """All variants (or the given ones) as one table in a fixed row order."""
        return pd.DataFrame([self.run_variant(label) for label in (labels or list(ABLATION_VARIANTS))])
