# PyDRTracker/regression/distractor.py

import math
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np
from scipy import ndimage

from ..core.response_map import ResponseMap
from ..exceptions import ShapeMismatchError
from .gaussian_label import GaussianLabel

Cell = Tuple[int, int]

# 3x3 neighborhood without its center; maxima must beat all eight neighbors.
_NEIGHBORS = np.array([[1, 1, 1], [1, 0, 1], [1, 1, 1]], dtype=bool)


def find_local_maxima(R) -> List[Tuple[Cell, float]]:
    """
    Cells strictly greater than each of their 8 cyclic neighbors.

    Args:
        R: ResponseMap or 2-D array.

    Returns:
        List of ((row, col), value), by value descending then row-major index
        ascending. Plateaus produce no maxima.
    """
    data = R.data if isinstance(R, ResponseMap) else np.asarray(R, dtype=np.float64)
    neighbor_max = ndimage.maximum_filter(data, footprint=_NEIGHBORS, mode="wrap")
    rows, cols = np.nonzero(data > neighbor_max)
    values = data[rows, cols]
    flat = rows * data.shape[1] + cols
    order = np.lexsort((flat, -values))
    return [((int(rows[k]), int(cols[k])), float(values[k])) for k in order]


@dataclass(frozen=True)
class CentralMask:
    """
    Target-sized rectangle centered on the label peak.

    Extents are rounded up to whole cells and clipped to the grid.
    """

    cells_h: int
    cells_w: int
    target_cells: Tuple[float, float]

    @property
    def extent(self) -> Cell:
        """(rows, cols) covered by the rectangle."""
        tw, th = self.target_cells
        return min(self.cells_h, math.ceil(th)), min(self.cells_w, math.ceil(tw))

    @property
    def mask(self) -> np.ndarray:
        rows, cols = self.extent
        top = self.cells_h // 2 - rows // 2
        left = self.cells_w // 2 - cols // 2
        mask = np.zeros((self.cells_h, self.cells_w), dtype=bool)
        mask[top:top + rows, left:left + cols] = True
        return mask


@dataclass(frozen=True)
class DistractorVector:
    """
    Per-cell repression multipliers d.

    d is 1 everywhere except at the repressed cells listed in `deviations`,
    where it equals 1 - mu * R.
    """

    data: np.ndarray
    deviations: List[Tuple[Cell, float]] = field(default_factory=list)

    @classmethod
    def identity(cls, cells_h: int, cells_w: int) -> "DistractorVector":
        return cls(np.ones((cells_h, cells_w)))

    @property
    def shape(self) -> Cell:
        return self.data.shape


@dataclass(frozen=True)
class RegressionTarget:
    """The dynamic label g * d used for training."""

    data: np.ndarray

    @property
    def shape(self) -> Cell:
        return self.data.shape


def distractor_vector(
    R: ResponseMap,
    peak_cell: Cell,
    target_cells: Tuple[float, float],
    N: int,
    mu: float,
) -> DistractorVector:
    """
    Repression vector from the local maxima of a normalized response map.

    The map is rolled so that its peak lands on the label center; the shift
    only relabels coordinates, so the repressed value at a cell is the
    response value the distractor had before shifting. Maxima inside the
    central target rectangle and maxima with non-positive response are
    skipped, then the N strongest survivors are repressed.

    The vector only acts through g * d, so a repressed cell changes the
    training target only where the Gaussian label is non-negligible. With
    the default sigma_factor of 1/16 the label of an 8x8-cell target is
    below 1e-13 outside the target rectangle, so repression leaves the
    learned filter unchanged;
    its effect on tracking shows up once the label is wide enough to reach
    the distractor (e.g. sigma_factor=0.5 for a blob 10 cells away).

    Args:
        R: Normalized response map (maximum 1).
        peak_cell: (row, col) argmax of R.
        target_cells: (width, height) of the target in cells.
        N: Maximum number of repressed cells.
        mu: Repression strength in [0, 1].

    Returns:
        DistractorVector aligned with the label grid.

    Example:
        >>> d = distractor_vector(R, R.peak(), (6.0, 6.0), N=30, mu=0.25)
    """
    cells_h, cells_w = R.shape
    shift = (cells_h // 2 - peak_cell[0], cells_w // 2 - peak_cell[1])
    shifted = np.roll(R.data, shift, axis=(0, 1))
    central = CentralMask(cells_h, cells_w, target_cells).mask

    kept = [
        (cell, value)
        for cell, value in find_local_maxima(shifted)
        if value > 0 and not central[cell]
    ][: max(N, 0)]

    data = np.ones((cells_h, cells_w))
    deviations = []
    for cell, value in kept:
        data[cell] = 1.0 - mu * value
        deviations.append((cell, float(data[cell])))
    return DistractorVector(data, deviations)


def dynamic_target(g: GaussianLabel, d: DistractorVector) -> RegressionTarget:
    """
    Elementwise product g * d.

    Raises:
        ShapeMismatchError: If the label and the vector differ in shape.
    """
    if g.shape != d.shape:
        raise ShapeMismatchError(f"Label shape {g.shape} does not match distractor vector shape {d.shape}.")
    return RegressionTarget(g.data * d.data)
