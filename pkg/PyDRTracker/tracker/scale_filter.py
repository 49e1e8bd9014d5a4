# PyDRTracker/tracker/scale_filter.py

import math
from typing import Optional, Tuple

import numpy as np
from scipy import fft as sp_fft

from ..core.image import Image
from ..features.hog_features import fhog
from ..imaging.patch_extractor import resample_patches

MIN_PATCH_SIDE = 4.0


class ScaleFilter:
    def __init__(
        self,
        base_size: Tuple[float, float],
        frame_size: Tuple[int, int],
        num_scales: int = 33,
        scale_step: float = 1.02,
        scale_sigma_factor: float = 0.25,
        learning_rate: float = 0.025,
        reg_lambda: float = 1e-2,
        model_max_area: float = 512.0,
        cell_size: int = 4,
    ):
        """
        One-dimensional correlation filter over a pyramid of target-tight patches.

        Args:
            base_size (Tuple[float, float]): Target (width, height) at scale 1.
            frame_size (Tuple[int, int]): Frame (width, height), bounds the largest scale.
            num_scales (int): Odd number of pyramid levels S.
            scale_step (float): Ratio a between neighboring levels.
            scale_sigma_factor (float): Label width relative to sqrt(S).
            learning_rate (float): Running-average weight of new samples.
            reg_lambda (float): Regularizer added to the denominator.
            model_max_area (float): Largest area of the resampled scale patch.
            cell_size (int): HOG cell size of the scale features.
        """
        if num_scales % 2 == 0:
            raise ValueError(f"num_scales must be odd, got {num_scales}.")
        if scale_step <= 1:
            raise ValueError(f"scale_step must be greater than 1, got {scale_step}.")
        self.base_size = base_size
        self.num_scales = num_scales
        self.scale_step = scale_step
        self.learning_rate = learning_rate
        self.reg_lambda = reg_lambda
        self.cell_size = cell_size

        exponents = num_scales // 2 - np.arange(num_scales)
        self.scale_factors = scale_step ** exponents.astype(np.float64)
        sigma = scale_sigma_factor * math.sqrt(num_scales)
        offsets = np.arange(num_scales) - num_scales // 2
        self.label_hat = sp_fft.fft(np.exp(-0.5 * offsets**2 / sigma**2))
        self.window = np.hanning(num_scales)

        width, height = base_size
        model_factor = min(1.0, math.sqrt(model_max_area / (width * height)))
        self.model_size = (
            max(cell_size, int(width * model_factor) // cell_size * cell_size),
            max(cell_size, int(height * model_factor) // cell_size * cell_size),
        )

        log_step = math.log(scale_step)
        frame_w, frame_h = frame_size
        self.min_scale = scale_step ** math.ceil(math.log(max(5.0 / width, 5.0 / height)) / log_step)
        self.max_scale = scale_step ** math.floor(math.log(min(frame_w / width, frame_h / height)) / log_step)
        self.min_scale = min(self.min_scale, 1.0)
        self.max_scale = max(self.max_scale, 1.0)

        self.numerator: Optional[np.ndarray] = None
        self.denominator: Optional[np.ndarray] = None

    def clamp(self, scale: float) -> float:
        return min(max(scale, self.min_scale), self.max_scale)

    def _sample(self, frame: Image, center: Tuple[float, float], scale: float) -> np.ndarray:
        """FFT along the scale axis of the windowed, flattened HOG pyramid, shape (S, D)."""
        width, height = self.base_size
        sizes = [
            (max(MIN_PATCH_SIDE, width * factor * scale), max(MIN_PATCH_SIDE, height * factor * scale))
            for factor in self.scale_factors
        ]
        patches = resample_patches(frame, center, sizes, self.model_size)
        features = fhog(patches, self.cell_size).reshape(self.num_scales, -1)
        return sp_fft.fft(features * self.window[:, None], axis=0)

    def update(self, frame: Image, center: Tuple[float, float], scale: float) -> None:
        """Blend a new pyramid sample into the filter; the first call sets it outright."""
        sample_hat = self._sample(frame, center, scale)
        numerator = self.label_hat[:, None] * np.conj(sample_hat)
        denominator = np.sum((sample_hat * np.conj(sample_hat)).real, axis=1)
        if self.numerator is None:
            self.numerator, self.denominator = numerator, denominator
            return
        rate = self.learning_rate
        self.numerator = (1 - rate) * self.numerator + rate * numerator
        self.denominator = (1 - rate) * self.denominator + rate * denominator

    def responses(self, frame: Image, center: Tuple[float, float], scale: float) -> np.ndarray:
        """Correlation score of every pyramid level, shape (S,)."""
        if self.numerator is None:
            raise RuntimeError("ScaleFilter.update must be called before responses.")
        sample_hat = self._sample(frame, center, scale)
        response_hat = np.sum(self.numerator * sample_hat, axis=1) / (self.denominator + self.reg_lambda)
        return sp_fft.ifft(response_hat).real

    def estimate(self, frame: Image, center: Tuple[float, float], scale: float) -> float:
        """Multiplicative factor of the best-scoring level."""
        return float(self.scale_factors[int(np.argmax(self.responses(frame, center, scale)))])
