# PyDRTracker/regression/gaussian_label.py

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np


@dataclass(frozen=True)
class GaussianLabel:
    """
    Fixed Gaussian regression target on the cell grid.

    The peak value 1 sits at (floor(H / 2), floor(W / 2)).
    """

    data: np.ndarray
    sigma: float

    @property
    def shape(self) -> Tuple[int, int]:
        return self.data.shape

    @property
    def center(self) -> Tuple[int, int]:
        return self.data.shape[0] // 2, self.data.shape[1] // 2


@lru_cache(maxsize=64)
def _label_data(cells_h: int, cells_w: int, sigma: float) -> np.ndarray:
    rows = np.arange(cells_h) - cells_h // 2
    cols = np.arange(cells_w) - cells_w // 2
    data = np.exp(-(rows[:, None] ** 2 + cols[None, :] ** 2) / (2.0 * sigma**2))
    data.setflags(write=False)
    return data


def gaussian_label(
    cells_h: int,
    cells_w: int,
    target_cells: Tuple[float, float],
    sigma_factor: float,
) -> GaussianLabel:
    """
    Build the Gaussian label g.

    Args:
        cells_h: Grid height in cells.
        cells_w: Grid width in cells.
        target_cells: (width, height) of the target in cells.
        sigma_factor: sigma = sigma_factor * sqrt(target_w * target_h).

    Returns:
        GaussianLabel with g = exp(-(di^2 + dj^2) / (2 sigma^2)).

    Raises:
        ValueError: If the grid is smaller than 3x3 or sigma is not positive.

    Example:
        >>> g = gaussian_label(25, 25, (5.0, 5.0), 1 / 16)
        >>> g.data[12, 12]
        1.0
    """
    if cells_h < 3 or cells_w < 3:
        raise ValueError(f"Label grid must be at least 3x3 cells, got {cells_h}x{cells_w}.")
    sigma = sigma_factor * math.sqrt(target_cells[0] * target_cells[1])
    if not sigma > 0:
        raise ValueError(f"Label sigma must be positive, got {sigma}.")
    return GaussianLabel(_label_data(int(cells_h), int(cells_w), float(sigma)), sigma)
