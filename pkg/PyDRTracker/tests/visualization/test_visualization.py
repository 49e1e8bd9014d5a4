from unittest.mock import patch

import numpy as np
import pytest

from PyDRTracker.config.tracker_config import TrackerConfig
from PyDRTracker.core.bbox import BBox
from PyDRTracker.core.image import Image
from PyDRTracker.data.synthetic import static_sequence
from PyDRTracker.evaluation.ope_runner import run_ope
from PyDRTracker.visualization.chart_generator import ChartGenerator
from PyDRTracker.visualization.overlay_renderer import BOX_COLOR, render_overlay, save_overlay


class FrozenTracker:
    def __init__(self, config=None):
        pass

    def init(self, frame, bbox):
        return bbox

    def track(self, state, frame):
        return state


def test_render_overlay_draws_box_outline():
    """Test the red outline and the untouched interior."""
    frame = Image(np.zeros((40, 50, 3), dtype=np.uint8))
    canvas = np.asarray(render_overlay(frame, BBox(10, 12, 20, 16), 3))
    assert tuple(canvas[12, 20]) == BOX_COLOR
    assert tuple(canvas[20, 10]) == BOX_COLOR
    assert tuple(canvas[20, 20]) == (0, 0, 0)


def test_save_overlay_gray_frame(tmp_path):
    """Test that gray frames are written as RGB images."""
    frame = Image(np.full((30, 30), 100, dtype=np.uint8))
    save_overlay(frame, BBox(5, 5, 10, 10), 1, tmp_path / "0001.png")
    assert (tmp_path / "0001.png").is_file()


def test_chart_generator_writes_files(tmp_path):
    """Test precision and success charts from a report."""
    report = run_ope(TrackerConfig(use_cn=False), [static_sequence(num_frames=3)], tracker_factory=FrozenTracker)
    charts = ChartGenerator({"frozen": report})
    charts.plot_precision(str(tmp_path / "precision.png"))
    charts.plot_success(str(tmp_path / "success.png"))
    assert (tmp_path / "precision.png").stat().st_size > 0
    assert (tmp_path / "success.png").stat().st_size > 0


def test_chart_generator_closes_figures(tmp_path):
    """Test that every figure is closed after saving."""
    report = run_ope(TrackerConfig(use_cn=False), [static_sequence(num_frames=3)], tracker_factory=FrozenTracker)
    with patch("PyDRTracker.visualization.chart_generator.plt.close") as close:
        ChartGenerator({"frozen": report}).plot_precision(str(tmp_path / "p.png"))
    close.assert_called_once()


def test_chart_generator_requires_reports():
    """Test that an empty report mapping is rejected."""
    with pytest.raises(ValueError, match="at least one report"):
        ChartGenerator({})
