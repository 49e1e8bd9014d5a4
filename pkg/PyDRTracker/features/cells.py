# PyDRTracker/features/cells.py

from typing import Tuple

import numpy as np

from ..exceptions import DimensionMismatchError


def cell_grid(height: int, width: int, cell_size: int) -> Tuple[int, int]:
    """
    Number of cells tiling a (height, width) patch.

    Raises:
        DimensionMismatchError: If either side is not a multiple of cell_size.
    """
    if cell_size < 1:
        raise DimensionMismatchError(f"Cell size must be a positive integer, got {cell_size}.")
    if height % cell_size or width % cell_size:
        raise DimensionMismatchError(
            f"Patch {width}x{height} is not divisible by cell size {cell_size}; round the patch size first."
        )
    return height // cell_size, width // cell_size


def cell_average(values: np.ndarray, cell_size: int) -> np.ndarray:
    """Mean over non-overlapping cells of a (..., H, W, K) array."""
    *lead, height, width, depth = values.shape
    cells_h, cells_w = cell_grid(height, width, cell_size)
    blocks = values.reshape(*lead, cells_h, cell_size, cells_w, cell_size, depth)
    return blocks.mean(axis=(-4, -2))
