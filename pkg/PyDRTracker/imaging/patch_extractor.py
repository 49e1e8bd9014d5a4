# PyDRTracker/imaging/patch_extractor.py

from typing import Sequence, Tuple

import numpy as np
from scipy import ndimage

from ..core.image import Image


def _as_extent(size) -> Tuple[int, int]:
    w, h = (int(round(float(s))) for s in size)
    if w <= 0 or h <= 0:
        raise ValueError(f"Patch size must be positive, got {tuple(size)}.")
    return w, h


def extract_patch(img: Image, center: Tuple[float, float], size: Tuple[float, float]) -> Image:
    """
    Crop a size-shaped window centered at `center`, replicating border pixels.

    The top-left pixel of the window is floor(c - size / 2 + 0.5) on each axis;
    every index is clamped into the frame, so centers far outside the frame
    still produce a fully replicated patch.

    Args:
        img: Source frame.
        center: (x, y) center in pixels.
        size: (width, height) of the window; rounded to whole pixels.

    Returns:
        Image of exactly (height, width) pixels with the source dtype.

    Example:
        >>> patch = extract_patch(frame, (120.0, 80.0), (64, 48))
    """
    w, h = _as_extent(size)
    cx, cy = center
    x0 = int(np.floor(cx - w / 2.0 + 0.5))
    y0 = int(np.floor(cy - h / 2.0 + 0.5))
    xs = np.clip(np.arange(x0, x0 + w), 0, img.width - 1)
    ys = np.clip(np.arange(y0, y0 + h), 0, img.height - 1)
    return Image(img.pixels[np.ix_(ys, xs)])


def _sample(pixels: np.ndarray, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    # Bilinear lookup at fractional (row, col) grids; edges replicate.
    out = np.empty(rows.shape + (pixels.shape[2],), dtype=np.float64)
    coords = np.stack([rows, cols])
    for c in range(pixels.shape[2]):
        out[..., c] = ndimage.map_coordinates(
            pixels[:, :, c].astype(np.float64, copy=False),
            coords,
            order=1,
            mode="nearest",
            prefilter=False,
        )
    return out


def resize(img: Image, new_size: Tuple[float, float]) -> Image:
    """
    Bilinear resampling to exactly `new_size` (width, height).

    Pixel centers are aligned (half-pixel convention) and no anti-alias
    prefilter is applied.
    """
    w, h = _as_extent(new_size)
    if (w, h) == img.size:
        return Image(img.pixels.astype(np.float64))
    rows = (np.arange(h) + 0.5) * (img.height / h) - 0.5
    cols = (np.arange(w) + 0.5) * (img.width / w) - 0.5
    grid_r, grid_c = np.meshgrid(rows, cols, indexing="ij")
    return Image(_sample(img.pixels, grid_r, grid_c))


def resample_patches(
    img: Image,
    center: Tuple[float, float],
    sizes: Sequence[Tuple[float, float]],
    out_size: Tuple[int, int],
) -> np.ndarray:
    """
    Crop several windows sharing a center and resample each to `out_size`.

    Cropping and resizing happen in one bilinear pass per window, which keeps
    the scale pyramid cheap.

    Args:
        img: Source frame.
        center: (x, y) shared center in pixels.
        sizes: Sequence of (width, height) window extents, fractional allowed.
        out_size: (width, height) of every output patch.

    Returns:
        float64 array of shape (len(sizes), out_h, out_w, channels).
    """
    out_w, out_h = _as_extent(out_size)
    sizes = np.asarray(sizes, dtype=np.float64).reshape(-1, 2)
    cx, cy = center
    steps_x = (np.arange(out_w) + 0.5) / out_w
    steps_y = (np.arange(out_h) + 0.5) / out_h
    cols = cx - sizes[:, 0:1] / 2.0 + steps_x[np.newaxis, :] * sizes[:, 0:1] - 0.5
    rows = cy - sizes[:, 1:2] / 2.0 + steps_y[np.newaxis, :] * sizes[:, 1:2] - 0.5
    grid_r = np.broadcast_to(rows[:, :, np.newaxis], (len(sizes), out_h, out_w))
    grid_c = np.broadcast_to(cols[:, np.newaxis, :], (len(sizes), out_h, out_w))
    return _sample(img.pixels, grid_r, grid_c)


def resample_patch(
    img: Image,
    center: Tuple[float, float],
    size: Tuple[float, float],
    out_size: Tuple[int, int],
) -> Image:
    """Single-window form of `resample_patches`."""
    return Image(resample_patches(img, center, [size], out_size)[0])
