# PyDRTracker/imaging/image_io.py

import logging
from pathlib import Path
from typing import Union

import numpy as np
from PIL import Image as PILImage

from ..core.image import Image

logger = logging.getLogger(__name__)

GRAY_MODES = {"1", "L", "LA", "I", "I;16", "F"}


def load_image(path: Union[str, Path]) -> Image:
    """
    Decode a still image file into an 8-bit grayscale or RGB Image.

    Args:
        path: Path to a JPEG, PNG or any other format Pillow can read.

    Returns:
        Image with 1 channel for grayscale sources and 3 channels otherwise.

    Raises:
        FileNotFoundError: If the file does not exist.
    """
    with PILImage.open(path) as source:
        mode = "L" if source.mode in GRAY_MODES else "RGB"
        pixels = np.asarray(source.convert(mode), dtype=np.uint8)
    return Image(pixels)


def save_image(image: Image, path: Union[str, Path]) -> None:
    """Write an Image to disk; the format follows the file extension."""
    pixels = np.clip(np.rint(image.pixels), 0, 255).astype(np.uint8)
    if image.channels == 1:
        PILImage.fromarray(pixels[:, :, 0]).save(path)
    else:
        PILImage.fromarray(pixels).save(path)
