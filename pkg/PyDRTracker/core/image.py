# PyDRTracker/core/image.py

from dataclasses import dataclass

import numpy as np

# ITU-R BT.601 luma weights, the same ones Pillow uses for mode "L".
GRAY_WEIGHTS = np.array([0.299, 0.587, 0.114])


@dataclass(frozen=True)
class Image:
    """
    A decoded frame or patch.

    Pixels are stored row-major as a (height, width, channels) array with
    intensities in [0, 255]. Frames decoded from disk are uint8; patches
    produced by resampling are float64.

    Attributes:
        pixels (np.ndarray): Array of shape (height, width, channels), channels in {1, 3}.
    """

    pixels: np.ndarray

    def __post_init__(self):
        pixels = np.asarray(self.pixels)
        if pixels.ndim == 2:
            pixels = pixels[:, :, np.newaxis]
        if pixels.ndim != 3 or pixels.shape[2] not in (1, 3):
            raise ValueError(f"Image pixels must have shape (H, W), (H, W, 1) or (H, W, 3), got {np.shape(self.pixels)}.")
        if pixels.shape[0] == 0 or pixels.shape[1] == 0:
            raise ValueError(f"Image must be non-empty, got shape {pixels.shape}.")
        object.__setattr__(self, "pixels", pixels)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def channels(self) -> int:
        return self.pixels.shape[2]

    @property
    def size(self) -> tuple:
        """(width, height) in pixels."""
        return self.width, self.height

    def to_gray(self) -> np.ndarray:
        """Return a float64 (height, width) luma array."""
        if self.channels == 1:
            return self.pixels[:, :, 0].astype(np.float64)
        return self.pixels.astype(np.float64) @ GRAY_WEIGHTS
