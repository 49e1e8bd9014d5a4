# PyDRTracker/fourier/spectrum.py

from dataclasses import dataclass

import numpy as np
from scipy import fft as sp_fft

from ..core.feature_map import FeatureMap
from ..exceptions import ShapeMismatchError, SpectrumSymmetryError

SYMMETRY_TOLERANCE = 1e-8


@dataclass(frozen=True)
class Spectrum:
    """
    Per-channel 2-D DFT of a cell-gridded map.

    Attributes:
        data (np.ndarray): Complex array of shape (cells_h, cells_w, channels).
        cell_size (int): Cell size of the spatial map it came from.
    """

    data: np.ndarray
    cell_size: int = 1

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.complex128)
        if data.ndim != 3:
            raise ValueError(f"Spectrum data must be 3-D (cells_h, cells_w, channels), got shape {data.shape}.")
        object.__setattr__(self, "data", data)

    @property
    def shape(self):
        return self.data.shape

    @property
    def num_cells(self) -> int:
        return self.data.shape[0] * self.data.shape[1]

    def __add__(self, other: "Spectrum") -> "Spectrum":
        _check_shapes(self, other)
        return Spectrum(self.data + other.data, self.cell_size)

    def __sub__(self, other: "Spectrum") -> "Spectrum":
        _check_shapes(self, other)
        return Spectrum(self.data - other.data, self.cell_size)

    def __mul__(self, scalar: complex) -> "Spectrum":
        return Spectrum(self.data * scalar, self.cell_size)

    __rmul__ = __mul__

    def conj(self) -> "Spectrum":
        return Spectrum(np.conj(self.data), self.cell_size)

    def channel_sum(self) -> "Spectrum":
        return Spectrum(self.data.sum(axis=2, keepdims=True), self.cell_size)


def _check_shapes(a: Spectrum, b: Spectrum) -> None:
    if a.shape != b.shape:
        raise ShapeMismatchError(f"Spectrum shapes differ: {a.shape} vs {b.shape}.")


def fft2(fm: FeatureMap) -> Spectrum:
    """Unnormalized forward 2-D DFT of every channel."""
    return Spectrum(sp_fft.fft2(fm.data, axes=(0, 1)), fm.cell_size)


def real_part(values: np.ndarray, check_symmetry: bool = True) -> np.ndarray:
    """
    Drop the imaginary residue of an inverse transform.

    Raises:
        SpectrumSymmetryError: If check_symmetry is set and the residue exceeds
            1e-8 of the largest real magnitude.
    """
    if check_symmetry:
        scale = np.max(np.abs(values.real), initial=0.0)
        residue = np.max(np.abs(values.imag), initial=0.0)
        if residue > SYMMETRY_TOLERANCE * max(scale, np.finfo(np.float64).tiny):
            raise SpectrumSymmetryError(
                f"Inverse transform left an imaginary residue of {residue:.3e} against a real scale of {scale:.3e}."
            )
    return np.ascontiguousarray(values.real)


def ifft2(sp: Spectrum, check_symmetry: bool = True) -> FeatureMap:
    """
    Inverse 2-D DFT scaled by 1 / (cells_h * cells_w), returned as a real map.

    Args:
        sp: A conjugate-symmetric spectrum.
        check_symmetry: Verify that the imaginary residue is negligible.

    Raises:
        SpectrumSymmetryError: If the spectrum is not the transform of a real map.
    """
    spatial = sp_fft.ifft2(sp.data, axes=(0, 1))
    return FeatureMap(real_part(spatial, check_symmetry), sp.cell_size)


def cross_correlate(a_hat: Spectrum, b_hat: Spectrum) -> Spectrum:
    """
    Frequency form of the cyclic cross-correlation r[t] = sum_x a[x + t] b[x].

    The product is a_hat * conj(b_hat), so correlating with a delta at the
    origin returns a_hat unchanged.

    Raises:
        ShapeMismatchError: If the spectra differ in shape.
    """
    _check_shapes(a_hat, b_hat)
    return Spectrum(a_hat.data * np.conj(b_hat.data), a_hat.cell_size)
