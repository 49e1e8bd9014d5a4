# PyDRTracker/solver/spatial_weight.py

from dataclasses import dataclass
from typing import Tuple

import numpy as np

WEIGHT_PROFILES = ("box", "quadratic")


@dataclass(frozen=True)
class SpatialWeight:
    """Positive per-cell penalty on filter energy, lowest on the target."""

    w: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.w, dtype=np.float64)
        if w.ndim != 2 or not np.all(w > 0):
            raise ValueError("SpatialWeight must be a 2-D array of positive values.")
        object.__setattr__(self, "w", w)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.w.shape

    @property
    def squared(self) -> np.ndarray:
        return self.w * self.w


def _normalized_offsets(cells: Tuple[int, int], target_cells: Tuple[float, float]):
    cells_h, cells_w = cells
    tw, th = target_cells
    if not (0 < tw <= cells_w and 0 < th <= cells_h):
        raise ValueError(f"Target of {tw}x{th} cells does not fit a {cells_w}x{cells_h} grid.")
    di = (np.arange(cells_h) - cells_h // 2) / (th / 2.0)
    dj = (np.arange(cells_w) - cells_w // 2) / (tw / 2.0)
    return di, dj


def make_spatial_weight(
    cells: Tuple[int, int],
    target_cells: Tuple[float, float],
    w_min: float = 1e-3,
    w_amp: float = 0.1,
) -> SpatialWeight:
    """
    Quadratic bowl w = w_min + w_amp * ((di / (th / 2))^2 + (dj / (tw / 2))^2).

    Args:
        cells: (cells_h, cells_w) of the filter grid.
        target_cells: (width, height) of the target in cells.
        w_min: Weight at the grid center.
        w_amp: Weight increase at the target boundary.

    Returns:
        SpatialWeight of shape cells.

    Raises:
        ValueError: If the target does not fit inside the grid.
    """
    di, dj = _normalized_offsets(cells, target_cells)
    return SpatialWeight(w_min + w_amp * (di[:, None] ** 2 + dj[None, :] ** 2))


def make_box_weight(
    cells: Tuple[int, int],
    target_cells: Tuple[float, float],
    w_min: float = 1e-3,
    w_max: float = 1e5,
) -> SpatialWeight:
    """
    Step weight: w_min on the target-sized central box, w_max on every other cell.

    The h step keeps a fraction gamma K / (w^2 + gamma K) of v + z per cell,
    so filter energy outside the box vanishes as long as w_max^2 is far above
    gamma_max * K.

    Raises:
        ValueError: If the target does not fit inside the grid or w_max < w_min.
    """
    if w_max < w_min:
        raise ValueError(f"w_max ({w_max}) must be at least w_min ({w_min}).")
    di, dj = _normalized_offsets(cells, target_cells)
    inside = (np.abs(di)[:, None] <= 1.0) & (np.abs(dj)[None, :] <= 1.0)
    return SpatialWeight(np.where(inside, w_min, w_max))


def build_spatial_weight(
    profile: str,
    cells: Tuple[int, int],
    target_cells: Tuple[float, float],
    w_min: float,
    w_amp: float,
    w_max: float,
) -> SpatialWeight:
    """Weight of the named profile ("box" or "quadratic")."""
    if profile == "box":
        return make_box_weight(cells, target_cells, w_min, w_max)
    if profile == "quadratic":
        return make_spatial_weight(cells, target_cells, w_min, w_amp)
    raise ValueError(f"Unknown spatial weight profile '{profile}'; use one of {WEIGHT_PROFILES}.")
