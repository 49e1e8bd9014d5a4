# PyDRTracker/evaluation/benchmark_report.py

from pathlib import Path
from typing import Any, Dict, List, Union

import numpy as np
import pandas as pd

from ..data.result_writer import write_boxes, write_curve_csv, write_summary_json
from ..utils.markdown_utils import create_markdown_table, create_markdown_table_from_rows
from ..utils.name_sanitizer import sanitize_file_stem
from .metrics import PRECISION_THRESHOLDS, SUCCESS_THRESHOLDS

MEAN_ROW = "mean"
TIMING_FIELDS = ("fps",)


class BenchmarkReport:
    def __init__(self, results: List):
        """
        Aggregated one-pass evaluation results.

        Args:
            results (List[SequenceResult]): Per-sequence results ordered by name.
        """
        self.results = results

    @property
    def succeeded(self) -> List:
        return [result for result in self.results if result.ok]

    @property
    def failures(self) -> Dict[str, str]:
        return {result.name: result.error for result in self.results if not result.ok}

    def mean_precision(self) -> float:
        scores = [result.precision_20 for result in self.succeeded]
        return float(np.mean(scores)) if scores else float("nan")

    def mean_auc(self) -> float:
        scores = [result.auc for result in self.succeeded]
        return float(np.mean(scores)) if scores else float("nan")

    def mean_fps(self) -> float:
        """Frames over total compute time, pooled across sequences."""
        frames = sum(len(result.record.times) for result in self.succeeded)
        seconds = sum(sum(result.record.times) for result in self.succeeded)
        return frames / seconds if seconds > 0 else float("nan")

    def mean_curves(self):
        """Per-threshold average of the precision and success curves."""
        if not self.succeeded:
            return np.zeros(len(PRECISION_THRESHOLDS)), np.zeros(len(SUCCESS_THRESHOLDS))
        precision = np.mean([result.precision.values for result in self.succeeded], axis=0)
        success = np.mean([result.success.values for result in self.succeeded], axis=0)
        return precision, success

    def to_dataframe(self) -> pd.DataFrame:
        """
        One row per sequence plus a mean row.

        Columns: sequence, precision_20, auc, fps, frames, zero_response_frames, error.
        """
        rows = []
        for result in self.results:
            rows.append(
                {
                    "sequence": result.name,
                    "precision_20": result.precision_20,
                    "auc": result.auc,
                    "fps": result.fps,
                    "frames": len(result.record.boxes) if result.record else 0,
                    "zero_response_frames": len(result.record.zero_response_frames) if result.record else 0,
                    "error": result.error or "",
                }
            )
        rows.append(
            {
                "sequence": MEAN_ROW,
                "precision_20": self.mean_precision(),
                "auc": self.mean_auc(),
                "fps": self.mean_fps(),
                "frames": sum(row["frames"] for row in rows),
                "zero_response_frames": sum(row["zero_response_frames"] for row in rows),
                "error": "",
            }
        )
        return pd.DataFrame(rows)

    def attribute_table(self) -> pd.DataFrame:
        """Mean precision@20 and AUC per attribute tag over successful sequences."""
        rows = [
            {"attribute": tag, "sequence": result.name, "precision_20": result.precision_20, "auc": result.auc}
            for result in self.succeeded
            for tag in sorted(result.attributes)
        ]
        if not rows:
            return pd.DataFrame(columns=["attribute", "sequences", "precision_20", "auc"])
        grouped = pd.DataFrame(rows).groupby("attribute", sort=True)
        table = grouped.agg(sequences=("sequence", "count"), precision_20=("precision_20", "mean"), auc=("auc", "mean"))
        return table.reset_index()

    def export_to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        """
        Summary as plain data; timing fields are dropped when include_timing is False.

        Example:
            >>> report.export_to_dict()["mean"]["precision_20"]
        """

        def scores(precision_20, auc, fps) -> Dict[str, float]:
            entry = {"precision_20": precision_20, "auc": auc}
            if include_timing:
                entry["fps"] = fps
            return entry

        return {
            "sequences": {result.name: scores(result.precision_20, result.auc, result.fps) for result in self.succeeded},
            "mean": scores(self.mean_precision(), self.mean_auc(), self.mean_fps()),
            "attributes": {
                row.attribute: {"sequences": int(row.sequences), "precision_20": row.precision_20, "auc": row.auc}
                for row in self.attribute_table().itertuples()
            },
            "failures": self.failures,
        }

    def generate(self) -> str:
        """Markdown table of the per-sequence scores, followed by failed sequences if any."""
        frame = self.to_dataframe()[["sequence", "precision_20", "auc", "fps"]]
        markdown = create_markdown_table_from_rows(frame.to_dict("records"), ["sequence", "precision_20", "auc", "fps"])
        if self.failures:
            markdown += "\nFailed sequences:\n\n" + create_markdown_table(self.failures)
        return markdown

    def write(self, out_dir: Union[str, Path]) -> Path:
        """
        Write summary.json, per-sequence and attribute CSVs, curve CSVs and box files.

        Returns:
            The output directory.
        """
        out_dir = Path(out_dir)
        boxes_dir = out_dir / "boxes"
        curves_dir = out_dir / "curves"
        boxes_dir.mkdir(parents=True, exist_ok=True)
        curves_dir.mkdir(parents=True, exist_ok=True)

        write_summary_json(out_dir / "summary.json", self.export_to_dict())
        self.to_dataframe().to_csv(out_dir / "sequences.csv", index=False, float_format="%.6f")
        self.attribute_table().to_csv(out_dir / "attributes.csv", index=False, float_format="%.6f")

        precision, success = self.mean_curves()
        write_curve_csv(out_dir / "precision.csv", PRECISION_THRESHOLDS, precision)
        write_curve_csv(out_dir / "success.csv", SUCCESS_THRESHOLDS, success)
        for result in self.succeeded:
            stem = sanitize_file_stem(result.name)
            write_boxes(boxes_dir / f"{stem}.txt", result.record.boxes)
            write_curve_csv(curves_dir / f"{stem}_precision.csv", result.precision.thresholds, result.precision.values)
            write_curve_csv(curves_dir / f"{stem}_success.csv", result.success.thresholds, result.success.values)
        return out_dir
