# PyDRTracker/data/result_writer.py

import json
from pathlib import Path
from typing import Any, Dict, Iterable, Union

import numpy as np
import pandas as pd

from ..core.bbox import BBox


def write_boxes(path: Union[str, Path], boxes: Iterable[BBox]) -> None:
    """One "x,y,w,h" line per frame."""
    Path(path).write_text("".join(box.to_line() + "\n" for box in boxes), encoding="utf-8")


def write_curve_csv(path: Union[str, Path], thresholds: np.ndarray, values: np.ndarray) -> None:
    """Two-column CSV (threshold, value)."""
    frame = pd.DataFrame({"threshold": np.asarray(thresholds), "value": np.asarray(values)})
    frame.to_csv(path, index=False, float_format="%.6f")


def _plain(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not np.isfinite(value):
        return None
    return value


def write_summary_json(path: Union[str, Path], summary: Dict[str, Any]) -> None:
    """Sorted, indented JSON so reruns produce byte-identical files."""
    Path(path).write_text(json.dumps(_plain(summary), sort_keys=True, indent=2) + "\n", encoding="utf-8")
