# PyDRTracker/features/gray_features.py

from ..core.feature_map import FeatureMap
from ..core.image import Image
from .cells import cell_average


def extract_gray(patch: Image, cell_size: int) -> FeatureMap:
    """
    Single-channel map of mean cell intensity, scaled to [-0.5, 0.5].

    Args:
        patch: Grayscale or RGB patch; RGB is converted to luma first.
        cell_size: Pixels per cell side.

    Returns:
        FeatureMap with one channel holding value / 255 - 0.5 per cell.

    Raises:
        DimensionMismatchError: If the patch is not tiled exactly by cells.

    Example:
        >>> extract_gray(patch, 4).channels
        1
    """
    gray = patch.to_gray()[:, :, None]
    return FeatureMap(cell_average(gray, cell_size) / 255.0 - 0.5, cell_size)
