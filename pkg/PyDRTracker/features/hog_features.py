# PyDRTracker/features/hog_features.py

import numpy as np

from ..core.feature_map import FeatureMap
from ..core.image import Image
from .cells import cell_grid

NUM_ORIENTATIONS = 9
HOG_CHANNELS = 3 * NUM_ORIENTATIONS + 4
TRUNCATION = 0.2
ENERGY_EPS = 1e-4
TEXTURE_SCALE = 0.2357


def _gradients(pixels: np.ndarray):
    """Central differences with replicated borders; strongest color channel wins."""
    pad = [(0, 0)] * (pixels.ndim - 3) + [(1, 1), (1, 1), (0, 0)]
    padded = np.pad(pixels, pad, mode="edge")
    dx = padded[..., 1:-1, 2:, :] - padded[..., 1:-1, :-2, :]
    dy = padded[..., 2:, 1:-1, :] - padded[..., :-2, 1:-1, :]
    magnitude2 = dx * dx + dy * dy
    if pixels.shape[-1] > 1:
        best = np.argmax(magnitude2, axis=-1)[..., None]
        dx = np.take_along_axis(dx, best, axis=-1)
        dy = np.take_along_axis(dy, best, axis=-1)
        magnitude2 = np.take_along_axis(magnitude2, best, axis=-1)
    return dx[..., 0], dy[..., 0], np.sqrt(magnitude2[..., 0])


def _orientation_histograms(pixels: np.ndarray, cell_size: int) -> np.ndarray:
    *lead, height, width, _ = pixels.shape
    cells_h, cells_w = cell_grid(height, width, cell_size)
    dx, dy, magnitude = _gradients(pixels)

    bins = 2 * NUM_ORIENTATIONS
    angle = np.mod(np.arctan2(dy, dx), 2.0 * np.pi)
    orientation = np.minimum((angle * (bins / (2.0 * np.pi))).astype(np.intp), bins - 1)

    batch = int(np.prod(lead)) if lead else 1
    cell_row = np.arange(height) // cell_size
    cell_col = np.arange(width) // cell_size
    cell_index = (cell_row[:, None] * cells_w + cell_col[None, :]) * bins
    batch_offset = np.arange(batch).reshape(batch, 1, 1) * (cells_h * cells_w * bins)
    flat_index = batch_offset + cell_index[None] + orientation.reshape(batch, height, width)
    hist = np.bincount(
        flat_index.ravel(),
        weights=magnitude.reshape(batch, height, width).ravel(),
        minlength=batch * cells_h * cells_w * bins,
    )
    return hist.reshape(*lead, cells_h, cells_w, bins)


def _block_normalizers(hist: np.ndarray) -> np.ndarray:
    """Inverse norms of the four 2x2 cell blocks touching each cell, shape (..., ch, cw, 4)."""
    half = NUM_ORIENTATIONS
    energy = np.sum((hist[..., :half] + hist[..., half:]) ** 2, axis=-1)
    pad = [(0, 0)] * (energy.ndim - 2) + [(1, 1), (1, 1)]
    energy = np.pad(energy, pad, mode="edge")
    blocks = energy[..., :-1, :-1] + energy[..., 1:, :-1] + energy[..., :-1, 1:] + energy[..., 1:, 1:]
    corners = np.stack(
        [blocks[..., :-1, :-1], blocks[..., :-1, 1:], blocks[..., 1:, :-1], blocks[..., 1:, 1:]],
        axis=-1,
    )
    return 1.0 / np.sqrt(corners + ENERGY_EPS)


def fhog(pixels: np.ndarray, cell_size: int) -> np.ndarray:
    """
    Felzenszwalb HOG over a batch of patches.

    Channels are 18 contrast-sensitive orientations, 9 contrast-insensitive
    orientations and 4 texture (block energy) features, each truncated at 0.2
    after block normalization.

    Args:
        pixels: float array of shape (..., H, W, C) with intensities in [0, 255].
        cell_size: Pixels per cell side; must divide H and W.

    Returns:
        Array of shape (..., H / cell_size, W / cell_size, 31).
    """
    pixels = np.asarray(pixels, dtype=np.float64)
    hist = _orientation_histograms(pixels, cell_size)
    norms = _block_normalizers(hist)

    # (..., ch, cw, 4, bins) after normalization by each block.
    sensitive = np.minimum(hist[..., None, :] * norms[..., :, None], TRUNCATION)
    insensitive_hist = hist[..., :NUM_ORIENTATIONS] + hist[..., NUM_ORIENTATIONS:]
    insensitive = np.minimum(insensitive_hist[..., None, :] * norms[..., :, None], TRUNCATION)

    return np.concatenate(
        [
            0.5 * sensitive.sum(axis=-2),
            0.5 * insensitive.sum(axis=-2),
            TEXTURE_SCALE * sensitive.sum(axis=-1),
        ],
        axis=-1,
    )


def extract_hog(patch: Image, cell_size: int) -> FeatureMap:
    """
    31-channel fHOG map of a patch.

    Raises:
        DimensionMismatchError: If the patch is not tiled exactly by cells.
    """
    return FeatureMap(fhog(patch.pixels, cell_size), cell_size)
