# PyDRTracker/tracker/dr_tracker.py

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from ..config.tracker_config import TrackerConfig
from ..core.bbox import BBox
from ..core.feature_map import FeatureMap
from ..core.image import Image
from ..core.response_map import ResponseMap
from ..data.cn_table_loader import load_cn_table
from ..exceptions import TrackerInitError
from ..features.cn_features import CnTable
from ..features.feature_pipeline import FeaturePipeline
from ..fourier.spectrum import cross_correlate, fft2, ifft2
from ..imaging.patch_extractor import extract_patch, resize
from ..regression.distractor import DistractorVector, distractor_vector, dynamic_target
from ..regression.gaussian_label import GaussianLabel, gaussian_label
from ..solver.admm_solver import AdmmParams, FilterBank, train
from ..solver.spatial_weight import SpatialWeight, build_spatial_weight
from .scale_filter import ScaleFilter

logger = logging.getLogger(__name__)

Point = Tuple[float, float]

MIN_TARGET_SIDE = 2.0


@dataclass(frozen=True)
class SearchGeometry:
    """
    Fixed layout of the search square and its resampled template.

    search_side is the square side in frame pixels at scale 1; template_side
    is the side after resampling, a multiple of the cell size.
    """

    search_side: float
    template_side: int
    cell_size: int
    target_cells: Tuple[float, float]

    @property
    def cells(self) -> int:
        return self.template_side // self.cell_size

    def extract_side(self, scale: float) -> int:
        """Side of the square cut from the frame at the given scale."""
        return max(1, int(round(self.search_side * scale)))

    @classmethod
    def build(cls, target_size: Tuple[float, float], config: TrackerConfig) -> "SearchGeometry":
        width, height = target_size
        search_side = config.search_factor * math.sqrt(width * height)
        area = search_side * search_side
        if area > config.max_search_area:
            resize_factor = math.sqrt(area / config.max_search_area)
        elif area < config.min_search_area:
            resize_factor = math.sqrt(area / config.min_search_area)
        else:
            resize_factor = 1.0
        cell = config.cell_size
        template_side = max(3 * cell, int(round(search_side / resize_factor / cell)) * cell)
        ratio = search_side / template_side
        cells = template_side // cell
        target_cells = (min(cells, width / ratio / cell), min(cells, height / ratio / cell))
        return cls(search_side, template_side, cell, target_cells)


@dataclass
class Detection:
    """Outcome of one detection step."""

    position: Point
    response: ResponseMap
    peak_cell: Tuple[int, int]
    zero_response: bool = False


@dataclass
class TrackerState:
    """
    Mutable per-sequence tracking state.

    position is the target center (x, y) in pixels; velocity is the last
    inter-frame displacement. last_response and last_distractor keep the
    most recent normalized response map and repression vector.
    """

    position: Point
    base_size: Tuple[float, float]
    scale: float
    velocity: Point
    filters: FilterBank
    v_last: np.ndarray
    scale_filter: Optional[ScaleFilter]
    frame_index: int
    config: TrackerConfig
    geometry: SearchGeometry
    label: GaussianLabel
    weight: SpatialWeight
    previous_position: Point
    last_response: Optional[ResponseMap] = None
    last_distractor: Optional[DistractorVector] = None
    zero_response_frames: list = field(default_factory=list)

    @property
    def target_size(self) -> Tuple[float, float]:
        return self.base_size[0] * self.scale, self.base_size[1] * self.scale

    @property
    def bbox(self) -> BBox:
        return BBox.from_center(self.position, self.target_size)


def build_feature_pipeline(config: TrackerConfig, cn_table: Optional[CnTable] = None) -> FeaturePipeline:
    """Feature pipeline for a config; a missing color-names table drops CN with a warning."""
    if config.use_cn and cn_table is None:
        path = config.resolved_cn_table_path()
        if path:
            cn_table = load_cn_table(path)
        else:
            logger.warning("No color-names table configured; tracking with gray and HOG features only")
    return FeaturePipeline(
        cell_size=config.cell_size,
        use_gray=config.use_gray,
        use_hog=config.use_hog,
        cn_table=cn_table if config.use_cn else None,
    )


def _subpixel_offset(left: float, center: float, right: float) -> float:
    divisor = 2.0 * center - right - left
    return 0.0 if divisor == 0 else 0.5 * (right - left) / divisor


class DRTracker:
    def __init__(self, config: Optional[TrackerConfig] = None, cn_table: Optional[CnTable] = None):
        """
        Correlation filter tracker with distractor repression and motion-aware search.

        The operations follow the per-frame order predict_search_center,
        detect, estimate_scale, update; `track` runs them in that order.

        Args:
            config (Optional[TrackerConfig]): Parameters; defaults when None.
            cn_table (Optional[CnTable]): Preloaded color-names table.
        """
        self.config = config or TrackerConfig()
        self.pipeline = build_feature_pipeline(self.config, cn_table)
        self.admm = AdmmParams(
            theta=self.config.theta,
            gamma0=self.config.gamma0,
            gamma_max=self.config.gamma_max,
            beta=self.config.beta,
            iterations=self.config.admm_iterations,
        )

    def _features(self, frame: Image, center: Point, scale: float, geometry: SearchGeometry) -> FeatureMap:
        side = geometry.extract_side(scale)
        patch = extract_patch(frame, center, (side, side))
        template = resize(patch, (geometry.template_side, geometry.template_side))
        return self.pipeline(template)

    def init(self, frame: Image, gt: BBox) -> TrackerState:
        """
        Seed a tracker from the first-frame box.

        Trains the filters with theta = 0 and the plain Gaussian label, and
        starts with zero velocity.

        Raises:
            TrackerInitError: If the box is narrower or shorter than 2 pixels
                or its center is not finite.
        """
        if gt.w < MIN_TARGET_SIDE or gt.h < MIN_TARGET_SIDE:
            raise TrackerInitError(f"Initial box {gt.w}x{gt.h} is too small; both sides must be at least 2 px.")
        center = gt.center
        if not all(math.isfinite(v) for v in center):
            raise TrackerInitError(f"Initial box center {center} is not finite.")

        config = self.config
        geometry = SearchGeometry.build(gt.size, config)
        cells = geometry.cells
        label = gaussian_label(cells, cells, geometry.target_cells, config.sigma_factor)
        weight = build_spatial_weight(
            config.weight_profile, (cells, cells), geometry.target_cells, config.weight_min, config.weight_amp, config.weight_max
        )

        features = self._features(frame, center, 1.0, geometry)
        target = dynamic_target(label, DistractorVector.identity(cells, cells))
        filters = train(features, target, None, self.admm.first_frame(), weight, config.check_symmetry)

        scale_filter = None
        if config.num_scales > 1:
            scale_filter = ScaleFilter(
                base_size=gt.size,
                frame_size=frame.size,
                num_scales=config.num_scales,
                scale_step=config.scale_step,
                scale_sigma_factor=config.scale_sigma_factor,
                learning_rate=config.scale_learning_rate,
                reg_lambda=config.scale_lambda,
                model_max_area=config.scale_model_max_area,
                cell_size=config.cell_size,
            )
            scale_filter.update(frame, center, 1.0)

        logger.debug(
            "Initialized tracker at %s: search side %.1f px, template %d px, %d cells",
            center, geometry.search_side, geometry.template_side, cells,
        )
        return TrackerState(
            position=center,
            base_size=gt.size,
            scale=1.0,
            velocity=(0.0, 0.0),
            filters=filters,
            v_last=filters.v,
            scale_filter=scale_filter,
            frame_index=1,
            config=config,
            geometry=geometry,
            label=label,
            weight=weight,
            previous_position=center,
        )

    def predict_search_center(self, state: TrackerState) -> Point:
        """Current position plus the last velocity; the position alone when no_ma is set."""
        if self.config.no_ma:
            return state.position
        return state.position[0] + state.velocity[0], state.position[1] + state.velocity[1]

    def detect(self, state: TrackerState, frame: Image) -> Detection:
        """
        Locate the target in a new frame.

        The response R = F^-1(sum_c s^_c h^_c) is divided by its maximum and
        the peak's cell offset from the label center is converted to pixels
        and added to the search center. A response whose maximum is not
        positive leaves the position where it was and sets `zero_response`.
        """
        geometry = state.geometry
        center = self.predict_search_center(state)
        search = fft2(self._features(frame, center, state.scale, geometry))
        template = state.filters.spectrum(geometry.cell_size).conj()
        raw = ifft2(cross_correlate(search, template).channel_sum(), self.config.check_symmetry).data[:, :, 0]
        response = ResponseMap(raw)

        if response.max_value <= 0:
            logger.warning("Zero response at frame %d; holding position", state.frame_index + 1)
            return Detection(state.position, response, response.center, zero_response=True)

        response = response.normalize()
        peak = response.peak()
        dy = float(peak[0] - response.center[0])
        dx = float(peak[1] - response.center[1])
        if self.config.subpixel_peak:
            rows, cols = response.shape
            data = response.data
            dy += _subpixel_offset(data[(peak[0] - 1) % rows, peak[1]], data[peak], data[(peak[0] + 1) % rows, peak[1]])
            dx += _subpixel_offset(data[peak[0], (peak[1] - 1) % cols], data[peak], data[peak[0], (peak[1] + 1) % cols])

        pixels_per_cell = geometry.cell_size * geometry.extract_side(state.scale) / geometry.template_side
        position = (center[0] + dx * pixels_per_cell, center[1] + dy * pixels_per_cell)
        return Detection(position, response, peak)

    def estimate_scale(self, state: TrackerState, frame: Image) -> float:
        """
        Pick the best pyramid level at the current position and update the scale filter.

        Returns:
            The multiplicative factor applied to the target size (1.0 when the
            scale filter is disabled).
        """
        if state.scale_filter is None:
            return 1.0
        factor = state.scale_filter.estimate(frame, state.position, state.scale)
        state.scale = state.scale_filter.clamp(state.scale * factor)
        state.scale_filter.update(frame, state.position, state.scale)
        return factor

    def update(self, state: TrackerState, frame: Image, R: ResponseMap) -> TrackerState:
        """
        Retrain the filters at the current position with the repressed label.

        The distractor vector comes from this frame's normalized response;
        it is the identity when no_dr is set or the response was empty.
        Velocity becomes the displacement since the previous update.
        """
        geometry = state.geometry
        cells = geometry.cells
        if self.config.no_dr or R.max_value <= 0:
            d = DistractorVector.identity(cells, cells)
        else:
            d = distractor_vector(R, R.peak(), geometry.target_cells, self.config.num_distractors, self.config.mu)

        features = self._features(frame, state.position, state.scale, geometry)
        target = dynamic_target(state.label, d)
        state.filters = train(features, target, state.v_last, self.admm, state.weight, self.config.check_symmetry)
        state.v_last = state.filters.v

        state.velocity = (
            state.position[0] - state.previous_position[0],
            state.position[1] - state.previous_position[1],
        )
        state.previous_position = state.position
        state.last_response = R
        state.last_distractor = d
        state.frame_index += 1
        return state

    def track(self, state: TrackerState, frame: Image) -> BBox:
        """Run one full frame: detect, move, rescale, retrain. Returns the new box."""
        detection = self.detect(state, frame)
        if detection.zero_response:
            state.zero_response_frames.append(state.frame_index + 1)
        state.position = detection.position
        self.estimate_scale(state, frame)
        self.update(state, frame, detection.response)
        return state.bbox
