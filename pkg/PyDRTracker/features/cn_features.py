# PyDRTracker/features/cn_features.py

from dataclasses import dataclass

import numpy as np

from ..core.feature_map import FeatureMap
from ..core.image import Image
from ..exceptions import CnTableError
from .cells import cell_average, cell_grid

CN_TABLE_ROWS = 32768


@dataclass(frozen=True)
class CnTable:
    """
    Color-names lookup table indexed by 5-bit quantized RGB.

    Row r + 32 g + 1024 b holds the color-name probabilities of the RGB bin
    (r, g, b), each coordinate in [0, 32).
    """

    probabilities: np.ndarray

    def __post_init__(self):
        table = np.asarray(self.probabilities, dtype=np.float64)
        if table.ndim != 2 or table.shape[0] != CN_TABLE_ROWS:
            raise CnTableError(f"Color-names table must have {CN_TABLE_ROWS} rows, got shape {table.shape}.")
        if table.shape[1] not in (10, 11):
            raise CnTableError(f"Color-names table must have 10 or 11 probability columns, got {table.shape[1]}.")
        if not np.all(np.isfinite(table)):
            raise CnTableError("Color-names table contains non-finite values.")
        table.setflags(write=False)
        object.__setattr__(self, "probabilities", table)

    @property
    def width(self) -> int:
        return self.probabilities.shape[1]

    def lookup(self, rgb: np.ndarray) -> np.ndarray:
        """Per-pixel probabilities for a (..., 3) array of [0, 255] intensities."""
        quantized = np.clip(np.floor(rgb), 0, 255).astype(np.intp) // 8
        index = quantized[..., 0] + 32 * quantized[..., 1] + 1024 * quantized[..., 2]
        return self.probabilities[index]


def extract_cn(patch: Image, cell_size: int, table: CnTable) -> FeatureMap:
    """
    Cell-averaged color-names probabilities.

    Grayscale patches carry no color information and yield a 0-channel map.

    Raises:
        DimensionMismatchError: If the patch is not tiled exactly by cells.
    """
    cells_h, cells_w = cell_grid(patch.height, patch.width, cell_size)
    if patch.channels != 3:
        return FeatureMap.empty(cells_h, cells_w, cell_size)
    return FeatureMap(cell_average(table.lookup(patch.pixels), cell_size), cell_size)
