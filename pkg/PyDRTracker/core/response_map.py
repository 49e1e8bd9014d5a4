# PyDRTracker/core/response_map.py

from dataclasses import dataclass
from typing import Tuple

import numpy as np


@dataclass(frozen=True)
class ResponseMap:
    """
    Correlation scores over the cell grid of a search patch.

    A normalized map has maximum exactly 1; `normalize` divides by the maximum.
    """

    data: np.ndarray

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.float64)
        if data.ndim != 2:
            raise ValueError(f"ResponseMap data must be 2-D, got shape {data.shape}.")
        if not np.all(np.isfinite(data)):
            raise ValueError("ResponseMap values must be finite.")
        object.__setattr__(self, "data", data)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.data.shape

    @property
    def center(self) -> Tuple[int, int]:
        """Cell of the regression label peak: (floor(H/2), floor(W/2))."""
        return self.data.shape[0] // 2, self.data.shape[1] // 2

    @property
    def max_value(self) -> float:
        return float(self.data.max())

    def peak(self) -> Tuple[int, int]:
        """Argmax cell; ties resolve to the first cell in row-major order."""
        return np.unravel_index(int(np.argmax(self.data)), self.data.shape)

    def normalize(self) -> "ResponseMap":
        """
        Divide by the maximum value.

        Raises:
            ValueError: If the maximum is not positive.
        """
        peak_value = self.max_value
        if peak_value <= 0:
            raise ValueError(f"Cannot normalize a response map with maximum {peak_value}.")
        return ResponseMap(self.data / peak_value)

    def value_at(self, cell: Tuple[int, int]) -> float:
        return float(self.data[cell[0] % self.data.shape[0], cell[1] % self.data.shape[1]])
