# PyDRTracker/solver/admm_solver.py

import logging
from dataclasses import dataclass, field, replace
from typing import List, Optional

import numpy as np
from scipy import fft as sp_fft

from ..core.feature_map import FeatureMap
from ..exceptions import NonFiniteError, ShapeMismatchError
from ..fourier.spectrum import Spectrum, real_part
from ..regression.distractor import RegressionTarget
from .spatial_weight import SpatialWeight

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AdmmParams:
    """
    Step schedule and temporal weight of one training solve.

    Attributes:
        theta (float): Temporal regularization weight; 0 on the first frame.
        gamma0 (float): Initial penalty step.
        gamma_max (float): Cap on the penalty step.
        beta (float): Step growth factor per iteration.
        iterations (int): Number of ADMM iterations E.
    """

    theta: float = 12.0
    gamma0: float = 1.0
    gamma_max: float = 10000.0
    beta: float = 10.0
    iterations: int = 4

    def __post_init__(self):
        if self.theta < 0:
            raise ValueError(f"theta must be non-negative, got {self.theta}.")
        if self.gamma0 <= 0 or self.gamma_max <= 0:
            raise ValueError(f"gamma0 and gamma_max must be positive, got {self.gamma0} and {self.gamma_max}.")
        if self.beta <= 1:
            raise ValueError(f"beta must be greater than 1, got {self.beta}.")
        if self.iterations < 1:
            raise ValueError(f"iterations must be at least 1, got {self.iterations}.")

    def first_frame(self) -> "AdmmParams":
        """Same schedule with the temporal term switched off."""
        return replace(self, theta=0.0)


@dataclass
class FilterBank:
    """
    Result of a training solve.

    h is the filter used for detection and v the auxiliary copy carried to the
    next frame as the temporal reference. z is the scaled multiplier u / gamma
    at the final step. `residuals` holds max |v - h| after every iteration.
    """

    h: np.ndarray
    v: np.ndarray
    z: np.ndarray
    h_hat: np.ndarray
    residuals: List[float] = field(default_factory=list)

    @property
    def channels(self) -> int:
        return self.h.shape[2]

    @property
    def grid(self) -> tuple:
        return self.h.shape[:2]

    def spectrum(self, cell_size: int = 1) -> Spectrum:
        return Spectrum(self.h_hat, cell_size)


def _ensure_finite(name: str, values: np.ndarray) -> None:
    if not np.all(np.isfinite(values)):
        raise NonFiniteError(f"{name} contains NaN or infinite values.")


def _channels(data: np.ndarray) -> np.ndarray:
    return data if data.ndim == 3 else data[:, :, None]


def solve_v(
    m_hat: Spectrum,
    target_hat: Spectrum,
    v_prev_hat: Spectrum,
    h_hat: Spectrum,
    z_hat: Spectrum,
    theta: float,
    gamma: float,
) -> Spectrum:
    """
    Per-frequency closed form of the v subproblem via Sherman-Morrison.

    At every frequency j the C-vector v solves
    (a a^H + (theta + gamma) I) v = q with a = conj(m_j) and
    q = a y_j + theta vl_j + gamma h_j - gamma z_j, so

        v = (q - a (a^H q) / (theta + gamma + a^H a)) / (theta + gamma).

    Args:
        m_hat: Training sample spectrum, shape (H, W, C).
        target_hat: Regression target spectrum, shape (H, W, 1).
        v_prev_hat: Previous frame's auxiliary spectrum.
        h_hat: Current filter spectrum.
        z_hat: Current scaled multiplier spectrum.
        theta: Temporal weight (>= 0).
        gamma: Penalty step (> 0).

    Returns:
        Spectrum of v with the shape of m_hat.

    Raises:
        NonFiniteError: If any input holds NaN or infinite values.
        ShapeMismatchError: If the spectra disagree in shape.
    """
    m = m_hat.data
    for name, sp in (("v_prev_hat", v_prev_hat), ("h_hat", h_hat), ("z_hat", z_hat)):
        if sp.shape != m.shape:
            raise ShapeMismatchError(f"{name} has shape {sp.shape}, expected {m.shape}.")
    y = _channels(target_hat.data)
    if y.shape[:2] != m.shape[:2]:
        raise ShapeMismatchError(f"Target spectrum grid {y.shape[:2]} does not match sample grid {m.shape[:2]}.")
    for name, values in (("m_hat", m), ("target_hat", y), ("v_prev_hat", v_prev_hat.data), ("h_hat", h_hat.data), ("z_hat", z_hat.data)):
        _ensure_finite(name, values)

    rho = theta + gamma
    a = np.conj(m)
    q = a * y + theta * v_prev_hat.data + gamma * (h_hat.data - z_hat.data)
    a_q = np.sum(m * q, axis=2, keepdims=True)
    a_a = np.sum((m * a).real, axis=2, keepdims=True)
    return Spectrum((q - a * (a_q / (rho + a_a))) / rho, m_hat.cell_size)


def solve_h(v: np.ndarray, z: np.ndarray, w: SpatialWeight, gamma: float, K: int) -> np.ndarray:
    """
    Spatial closed form h = gamma K (v + z) / (w * w + gamma K), channel by channel.

    Args:
        v: Auxiliary variable, real (H, W, C).
        z: Scaled multiplier, real (H, W, C).
        w: Spatial weight of shape (H, W).
        gamma: Penalty step.
        K: Number of cells H * W.
    """
    if v.shape != z.shape or v.shape[:2] != w.shape:
        raise ShapeMismatchError(f"solve_h shapes disagree: v {v.shape}, z {z.shape}, w {w.shape}.")
    scale = gamma * K
    return scale * (v + z) / (w.squared[:, :, None] + scale)


def update_multiplier(z, v, h, gamma: float):
    """z + gamma (v - h); applied to the unscaled multiplier u = gamma z."""
    return z + gamma * (v - h)


def update_step(gamma: float, beta: float, gamma_max: float) -> float:
    return min(gamma_max, beta * gamma)


def _target_spectrum(target: RegressionTarget, cell_size: int) -> Spectrum:
    return Spectrum(sp_fft.fft2(target.data)[:, :, None], cell_size)


def train(
    m: FeatureMap,
    target: RegressionTarget,
    v_last: Optional[np.ndarray],
    params: AdmmParams,
    w: SpatialWeight,
    check_symmetry: bool = True,
) -> FilterBank:
    """
    Learn a filter bank by running E ADMM iterations from h = z = 0.

    Args:
        m: Windowed training features.
        target: Regression target g * d on the same grid.
        v_last: Auxiliary variable of the previous frame, or None on the first
            frame (treated as zeros).
        params: Step schedule; pass `params.first_frame()` on frame 1.
        w: Spatial weight on the same grid.
        check_symmetry: Verify real-valuedness of every inverse transform.

    Returns:
        FilterBank with h, v, the final scaled multiplier and the per-iteration
        consensus residuals.

    Raises:
        NonFiniteError: If the solve produces NaN or infinite values.
        ShapeMismatchError: If grids disagree.
    """
    cells_h, cells_w, channels = m.data.shape
    if target.shape != (cells_h, cells_w) or w.shape != (cells_h, cells_w):
        raise ShapeMismatchError(
            f"Training grid {(cells_h, cells_w)} does not match target {target.shape} or weight {w.shape}."
        )
    K = cells_h * cells_w
    cell = m.cell_size

    m_hat = Spectrum(sp_fft.fft2(m.data, axes=(0, 1)), cell)
    y_hat = _target_spectrum(target, cell)
    if v_last is None:
        vl_hat = Spectrum(np.zeros(m.data.shape, dtype=np.complex128), cell)
    else:
        if v_last.shape != m.data.shape:
            raise ShapeMismatchError(f"Previous auxiliary shape {v_last.shape} does not match features {m.data.shape}.")
        vl_hat = Spectrum(sp_fft.fft2(v_last, axes=(0, 1)), cell)

    h = np.zeros(m.data.shape)
    u = np.zeros(m.data.shape)
    h_hat = np.zeros(m.data.shape, dtype=np.complex128)
    u_hat = np.zeros(m.data.shape, dtype=np.complex128)
    gamma = params.gamma0
    residuals = []

    for iteration in range(params.iterations):
        v_hat = solve_v(m_hat, y_hat, vl_hat, Spectrum(h_hat, cell), Spectrum(u_hat / gamma, cell), params.theta, gamma)
        v = real_part(sp_fft.ifft2(v_hat.data, axes=(0, 1)), check_symmetry)
        h = solve_h(v, u / gamma, w, gamma, K)
        h_hat = sp_fft.fft2(h, axes=(0, 1))
        u = update_multiplier(u, v, h, gamma)
        u_hat = update_multiplier(u_hat, v_hat.data, h_hat, gamma)
        residuals.append(float(np.max(np.abs(v - h))))
        logger.debug("ADMM iteration %d: gamma=%g consensus residual=%.3e", iteration + 1, gamma, residuals[-1])
        gamma = update_step(gamma, params.beta, params.gamma_max)

    _ensure_finite("trained filter", h)
    return FilterBank(h=h, v=v, z=u / gamma, h_hat=h_hat, residuals=residuals)


def objective(
    h: np.ndarray,
    m: FeatureMap,
    target: RegressionTarget,
    v_last: Optional[np.ndarray],
    theta: float,
    w: SpatialWeight,
) -> float:
    """
    Training objective minimized by `train`.

    0.5 |y^ - sum_c m^_c h^_c|^2 + theta / 2 sum_c |h^_c - vl^_c|^2 + 0.5 sum_c |w h_c|^2,
    with the first two norms over the unnormalized spectrum.
    """
    h_hat = sp_fft.fft2(h, axes=(0, 1))
    m_hat = sp_fft.fft2(m.data, axes=(0, 1))
    y_hat = sp_fft.fft2(target.data)
    residual = y_hat - np.sum(m_hat * h_hat, axis=2)
    value = 0.5 * np.sum(np.abs(residual) ** 2)
    if theta:
        vl_hat = 0.0 if v_last is None else sp_fft.fft2(v_last, axes=(0, 1))
        value += 0.5 * theta * np.sum(np.abs(h_hat - vl_hat) ** 2)
    value += 0.5 * np.sum(w.squared[:, :, None] * h * h)
    return float(value)
