# PyDRTracker/visualization/overlay_renderer.py

from pathlib import Path
from typing import Tuple, Union

import numpy as np
from PIL import Image as PILImage
from PIL import ImageDraw

from ..core.bbox import BBox
from ..core.image import Image

BOX_COLOR = (255, 0, 0)
TEXT_COLOR = (255, 255, 0)
LINE_WIDTH = 2


def render_overlay(frame: Image, box: BBox, frame_index: int) -> PILImage.Image:
    """
    Draw the predicted box (2 px, red) and the frame index on a copy of the frame.

    Example:
        >>> render_overlay(frame, box, 12).save("0012.png")
    """
    pixels = np.clip(np.rint(frame.pixels), 0, 255).astype(np.uint8)
    if frame.channels == 1:
        pixels = np.repeat(pixels, 3, axis=2)
    canvas = PILImage.fromarray(pixels)
    draw = ImageDraw.Draw(canvas)
    corners: Tuple[float, float, float, float] = (box.x, box.y, box.x + box.w - 1, box.y + box.h - 1)
    draw.rectangle(corners, outline=BOX_COLOR, width=LINE_WIDTH)
    draw.text((4, 4), f"#{frame_index}", fill=TEXT_COLOR)
    return canvas


def save_overlay(frame: Image, box: BBox, frame_index: int, path: Union[str, Path]) -> None:
    render_overlay(frame, box, frame_index).save(path)
