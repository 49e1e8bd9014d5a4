# PyDRTracker/core/feature_map.py

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class FeatureMap:
    """
    Multi-channel, cell-gridded appearance representation of a patch.

    Attributes:
        data (np.ndarray): Real array of shape (cells_h, cells_w, channels).
        cell_size (int): Pixels per cell side.
    """

    data: np.ndarray
    cell_size: int

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.float64)
        if data.ndim != 3:
            raise ValueError(f"FeatureMap data must be 3-D (cells_h, cells_w, channels), got shape {data.shape}.")
        if not np.all(np.isfinite(data)):
            raise ValueError("FeatureMap values must be finite.")
        object.__setattr__(self, "data", data)

    @classmethod
    def empty(cls, cells_h: int, cells_w: int, cell_size: int) -> "FeatureMap":
        """A map with zero channels, contributed by extractors that do not apply to the input."""
        return cls(data=np.zeros((cells_h, cells_w, 0)), cell_size=cell_size)

    @property
    def cells_h(self) -> int:
        return self.data.shape[0]

    @property
    def cells_w(self) -> int:
        return self.data.shape[1]

    @property
    def channels(self) -> int:
        return self.data.shape[2]

    @property
    def grid(self) -> tuple:
        return self.cells_h, self.cells_w
