# PyDRTracker/features/feature_pipeline.py

import logging
from functools import lru_cache
from typing import List, Optional

import numpy as np

from ..core.feature_map import FeatureMap
from ..core.image import Image
from ..exceptions import ShapeMismatchError
from .cn_features import CnTable, extract_cn
from .gray_features import extract_gray
from .hog_features import extract_hog

logger = logging.getLogger(__name__)


def compose(maps: List[FeatureMap]) -> FeatureMap:
    """
    Stack feature maps along the channel axis.

    Args:
        maps: Non-empty list of maps sharing grid and cell size.

    Returns:
        FeatureMap whose channel count is the sum of the inputs'.

    Raises:
        ShapeMismatchError: If the grids or cell sizes differ.
    """
    if not maps:
        raise ShapeMismatchError("compose needs at least one feature map.")
    first = maps[0]
    for fm in maps[1:]:
        if fm.grid != first.grid or fm.cell_size != first.cell_size:
            raise ShapeMismatchError(
                f"Cannot compose a {fm.grid} map (cell {fm.cell_size}) with a {first.grid} map (cell {first.cell_size})."
            )
    return FeatureMap(np.concatenate([fm.data for fm in maps], axis=2), first.cell_size)


@lru_cache(maxsize=64)
def hann_window(cells_h: int, cells_w: int) -> np.ndarray:
    """Read-only 2-D Hann window, zero on the border ring."""
    window = np.outer(np.hanning(cells_h), np.hanning(cells_w))
    window.setflags(write=False)
    return window


def apply_window(fm: FeatureMap) -> FeatureMap:
    """Multiply every channel by the Hann window of the map's grid."""
    return FeatureMap(fm.data * hann_window(fm.cells_h, fm.cells_w)[:, :, None], fm.cell_size)


class FeaturePipeline:
    def __init__(
        self,
        cell_size: int = 4,
        use_gray: bool = True,
        use_hog: bool = True,
        cn_table: Optional[CnTable] = None,
    ):
        """
        Composes the enabled extractors and windows the result.

        Args:
            cell_size (int): Pixels per cell side.
            use_gray (bool): Include the gray channel.
            use_hog (bool): Include the 31 HOG channels.
            cn_table (Optional[CnTable]): Color-names table; None disables CN.
        """
        if not (use_gray or use_hog or cn_table is not None):
            raise ValueError("At least one feature extractor must be enabled.")
        self.cell_size = cell_size
        self.use_gray = use_gray
        self.use_hog = use_hog
        self.cn_table = cn_table

    def extract(self, patch: Image) -> FeatureMap:
        """Raw composed features of a patch, before windowing."""
        maps = []
        if self.use_gray:
            maps.append(extract_gray(patch, self.cell_size))
        if self.use_hog:
            maps.append(extract_hog(patch, self.cell_size))
        if self.cn_table is not None:
            cn = extract_cn(patch, self.cell_size, self.cn_table)
            if cn.channels:
                maps.append(cn)
        return compose(maps)

    def __call__(self, patch: Image) -> FeatureMap:
        return apply_window(self.extract(patch))
