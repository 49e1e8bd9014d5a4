# PyDRTracker/visualization/chart_generator.py

import logging
from typing import Dict, Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from ..evaluation.benchmark_report import BenchmarkReport  # noqa: E402
from ..evaluation.metrics import PRECISION_REPORT_THRESHOLD, PRECISION_THRESHOLDS, SUCCESS_THRESHOLDS  # noqa: E402

logger = logging.getLogger(__name__)


class ChartGenerator:
    def __init__(self, reports: Dict[str, BenchmarkReport]):
        """
        Initialize the ChartGenerator.

        Args:
            reports (Dict[str, BenchmarkReport]): Benchmark reports keyed by the label shown in the legend.
        """
        if not reports:
            raise ValueError("ChartGenerator needs at least one report.")
        self.reports = reports

    def plot_precision(self, save_path: str, title: Optional[str] = None) -> None:
        """
        Plot mean precision curves, one line per report, labelled with precision@20.

        Args:
            save_path (str): Image file to write.
            title (Optional[str]): Chart title.

        Example:
            >>> ChartGenerator({"full": report}).plot_precision("precision.png")
        """
        plt.figure(figsize=(8, 6))
        for label, report in self.reports.items():
            precision, _ = report.mean_curves()
            plt.plot(PRECISION_THRESHOLDS, precision, label=f"{label} [{report.mean_precision():.3f}]")
        plt.axvline(PRECISION_REPORT_THRESHOLD, color="grey", linestyle="--", linewidth=0.8)
        plt.title(title or "Precision plots of OPE")
        plt.xlabel("Location error threshold (pixels)")
        plt.ylabel("Precision")
        plt.ylim(0, 1.02)
        plt.grid(True)
        plt.legend(loc="lower right")
        plt.tight_layout()
        plt.savefig(save_path)
        plt.close()
        logger.info("Chart saved to %s", save_path)

    def plot_success(self, save_path: str, title: Optional[str] = None) -> None:
        """
        Plot mean success curves, one line per report, labelled with AUC.

        Args:
            save_path (str): Image file to write.
            title (Optional[str]): Chart title.
        """
        plt.figure(figsize=(8, 6))
        for label, report in self.reports.items():
            _, success = report.mean_curves()
            plt.plot(SUCCESS_THRESHOLDS, success, label=f"{label} [{report.mean_auc():.3f}]")
        plt.title(title or "Success plots of OPE")
        plt.xlabel("Overlap threshold")
        plt.ylabel("Success rate")
        plt.ylim(0, 1.02)
        plt.grid(True)
        plt.legend(loc="lower left")
        plt.tight_layout()
        plt.savefig(save_path)
        plt.close()
        logger.info("Chart saved to %s", save_path)
