# PyDRTracker/evaluation/metrics.py

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..core.bbox import BBox
from ..exceptions import ShapeMismatchError

logger = logging.getLogger(__name__)

PRECISION_THRESHOLDS = np.arange(0, 51, dtype=np.float64)
SUCCESS_THRESHOLDS = np.linspace(0.0, 1.0, 101)
PRECISION_REPORT_THRESHOLD = 20.0


@dataclass(frozen=True)
class Curve:
    """Fraction of frames passing each threshold."""

    thresholds: np.ndarray
    values: np.ndarray

    def value_at(self, threshold: float) -> float:
        index = int(np.argmin(np.abs(self.thresholds - threshold)))
        return float(self.values[index])

    @property
    def mean(self) -> float:
        return float(np.mean(self.values))


def _valid_pairs(pred: Sequence[BBox], gt: Sequence[Optional[BBox]]) -> Tuple[np.ndarray, np.ndarray]:
    if len(pred) != len(gt):
        raise ShapeMismatchError(f"Got {len(pred)} predictions for {len(gt)} groundtruth entries.")
    pairs = [(p, g) for p, g in zip(pred, gt) if g is not None]
    if not pairs:
        empty = np.zeros((0, 4))
        return empty, empty
    pred_arr = np.array([[p.x, p.y, p.w, p.h] for p, _ in pairs], dtype=np.float64)
    gt_arr = np.array([[g.x, g.y, g.w, g.h] for _, g in pairs], dtype=np.float64)
    return pred_arr, gt_arr


def center_errors(pred: Sequence[BBox], gt: Sequence[Optional[BBox]]) -> np.ndarray:
    """Euclidean center distance per frame with a groundtruth box."""
    pred_arr, gt_arr = _valid_pairs(pred, gt)
    pred_centers = pred_arr[:, :2] + pred_arr[:, 2:] / 2.0
    gt_centers = gt_arr[:, :2] + gt_arr[:, 2:] / 2.0
    return np.sqrt(np.sum((pred_centers - gt_centers) ** 2, axis=1))


def overlaps(pred: Sequence[BBox], gt: Sequence[Optional[BBox]]) -> np.ndarray:
    """Intersection over union per frame with a groundtruth box."""
    a, b = _valid_pairs(pred, gt)
    left = np.maximum(a[:, 0], b[:, 0])
    right = np.minimum(a[:, 0] + a[:, 2], b[:, 0] + b[:, 2])
    top = np.maximum(a[:, 1], b[:, 1])
    bottom = np.minimum(a[:, 1] + a[:, 3], b[:, 1] + b[:, 3])
    intersection = np.maximum(0.0, right - left) * np.maximum(0.0, bottom - top)
    union = a[:, 2] * a[:, 3] + b[:, 2] * b[:, 3] - intersection
    return np.clip(intersection / union, 0.0, 1.0)


def _fractions(scores: np.ndarray, thresholds: np.ndarray, below: bool, strict: bool) -> np.ndarray:
    if scores.size == 0:
        logger.warning("No frames with groundtruth; curve is all zeros")
        return np.zeros(len(thresholds))
    column = scores[:, None]
    row = thresholds[None, :]
    if below:
        passed = column < row if strict else column <= row
    else:
        passed = column > row if strict else column >= row
    return passed.mean(axis=0)


def check_monotone(curve: Curve, increasing: bool) -> None:
    """
    Raise if a curve breaks its monotonicity.

    Raises:
        AssertionError: If precision ever decreases or success ever increases.
    """
    steps = np.diff(curve.values)
    broken = np.any(steps < 0) if increasing else np.any(steps > 0)
    if broken:
        direction = "non-decreasing" if increasing else "non-increasing"
        raise AssertionError(f"Curve is not {direction} in its threshold: {curve.values.tolist()}")


def precision_curve(
    pred: Sequence[BBox],
    gt: Sequence[Optional[BBox]],
    thresholds: np.ndarray = PRECISION_THRESHOLDS,
    strict: bool = False,
) -> Curve:
    """
    Fraction of frames whose center error is within each pixel threshold.

    Args:
        pred: Predicted boxes, one per frame.
        gt: Groundtruth boxes; None entries are excluded.
        thresholds: Pixel thresholds, 0..50 by default.
        strict: Use "<" instead of "<=".

    Raises:
        ShapeMismatchError: If the lists differ in length.

    Example:
        >>> precision_curve(boxes, groundtruth).value_at(20)
    """
    thresholds = np.asarray(thresholds, dtype=np.float64)
    curve = Curve(thresholds, _fractions(center_errors(pred, gt), thresholds, below=True, strict=strict))
    check_monotone(curve, increasing=True)
    return curve


def success_curve(
    pred: Sequence[BBox],
    gt: Sequence[Optional[BBox]],
    thresholds: np.ndarray = SUCCESS_THRESHOLDS,
    strict: bool = True,
) -> Tuple[Curve, float]:
    """
    Fraction of frames whose overlap exceeds each threshold, and its mean (AUC).

    With the default strict ">" a perfect tracker scores 100 / 101 because no
    overlap exceeds 1.0.

    Raises:
        ShapeMismatchError: If the lists differ in length.
    """
    thresholds = np.asarray(thresholds, dtype=np.float64)
    curve = Curve(thresholds, _fractions(overlaps(pred, gt), thresholds, below=False, strict=strict))
    check_monotone(curve, increasing=False)
    return curve, curve.mean


def summarize(pred: List[BBox], gt: List[Optional[BBox]], precision_strict: bool = False, success_strict: bool = True):
    """Precision curve, success curve, precision@20 and AUC in one call."""
    precision = precision_curve(pred, gt, strict=precision_strict)
    success, auc = success_curve(pred, gt, strict=success_strict)
    return precision, success, precision.value_at(PRECISION_REPORT_THRESHOLD), auc
