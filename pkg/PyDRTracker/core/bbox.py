# PyDRTracker/core/bbox.py

import math
from dataclasses import dataclass
from typing import Optional, Tuple


@dataclass(frozen=True)
class BBox:
    """
    Axis-aligned bounding box in pixel coordinates.

    Pixel i covers [i, i + 1), so the center of a box is (x + w / 2, y + h / 2).
    """

    x: float
    y: float
    w: float
    h: float

    def __post_init__(self):
        if not (self.w > 0 and self.h > 0):
            raise ValueError(f"BBox width and height must be positive, got w={self.w}, h={self.h}.")

    @classmethod
    def from_center(cls, center: Tuple[float, float], size: Tuple[float, float]) -> "BBox":
        cx, cy = center
        w, h = size
        return cls(x=cx - w / 2.0, y=cy - h / 2.0, w=w, h=h)

    @classmethod
    def parse(cls, values) -> Optional["BBox"]:
        """
        Build a box from four numbers, or return None for a missing annotation.

        Args:
            values: Iterable of four floats (x, y, w, h).

        Returns:
            The box, or None if any value is NaN or the extent is not positive.
        """
        x, y, w, h = (float(v) for v in values)
        if any(math.isnan(v) for v in (x, y, w, h)) or w <= 0 or h <= 0:
            return None
        return cls(x=x, y=y, w=w, h=h)

    @property
    def center(self) -> Tuple[float, float]:
        return self.x + self.w / 2.0, self.y + self.h / 2.0

    @property
    def size(self) -> Tuple[float, float]:
        return self.w, self.h

    def iou(self, other: "BBox") -> float:
        """Intersection over union with another box."""
        left = max(self.x, other.x)
        right = min(self.x + self.w, other.x + other.w)
        top = max(self.y, other.y)
        bottom = min(self.y + self.h, other.y + other.h)
        intersection = max(0.0, right - left) * max(0.0, bottom - top)
        union = self.w * self.h + other.w * other.h - intersection
        return intersection / union

    def to_line(self) -> str:
        """Serialize as an "x,y,w,h" line with fixed precision."""
        return f"{self.x:.3f},{self.y:.3f},{self.w:.3f},{self.h:.3f}"
