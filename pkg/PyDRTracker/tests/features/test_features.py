import numpy as np
import pytest

from PyDRTracker.core.feature_map import FeatureMap
from PyDRTracker.core.image import Image
from PyDRTracker.exceptions import DimensionMismatchError, ShapeMismatchError
from PyDRTracker.features.cells import cell_grid
from PyDRTracker.features.cn_features import CnTable, extract_cn
from PyDRTracker.features.feature_pipeline import FeaturePipeline, apply_window, compose, hann_window
from PyDRTracker.features.gray_features import extract_gray
from PyDRTracker.features.hog_features import HOG_CHANNELS, extract_hog, fhog


def test_cell_grid_rejects_non_multiple():
    """Test that a 10x12 patch with cell 4 is rejected."""
    with pytest.raises(DimensionMismatchError, match="not divisible"):
        cell_grid(10, 12, 4)


def test_extract_gray_range():
    """Test that black and white patches map to -0.5 and 0.5."""
    black = extract_gray(Image(np.zeros((8, 8), dtype=np.uint8)), 4)
    white = extract_gray(Image(np.full((8, 8), 255, dtype=np.uint8)), 4)
    assert black.grid == (2, 2)
    assert np.allclose(black.data, -0.5)
    assert np.allclose(white.data, 0.5)


def test_hog_shape_and_bounds(noise_frame):
    """Test channel count and the truncation bound of fHOG."""
    patch = Image(noise_frame.pixels[:64, :48])
    fm = extract_hog(patch, 4)
    assert fm.data.shape == (16, 12, HOG_CHANNELS)
    assert np.all(fm.data >= 0)
    # 4 blocks at most 0.2 each, scaled by 0.5.
    assert np.all(fm.data[..., :27] <= 0.4 + 1e-12)


def test_hog_flat_patch_is_zero():
    """Test that a constant patch has no gradient energy."""
    fm = extract_hog(Image(np.full((16, 16, 3), 90, dtype=np.uint8)), 4)
    assert np.allclose(fm.data, 0.0)


def test_hog_batch_matches_single(noise_frame):
    """Test that batched fHOG equals per-patch fHOG."""
    a = noise_frame.pixels[:32, :32].astype(np.float64)
    b = noise_frame.pixels[32:64, 32:64].astype(np.float64)
    batched = fhog(np.stack([a, b]), 4)
    assert np.allclose(batched[0], fhog(a, 4))
    assert np.allclose(batched[1], fhog(b, 4))


def test_hog_vertical_edge_orientation():
    """Test that a vertical step edge fills the horizontal-gradient bins."""
    pixels = np.zeros((16, 16, 1))
    pixels[:, 8:] = 255.0
    hist_cell = fhog(pixels, 4)[1, 1]
    # Gradient along +x: sensitive bin 0 and insensitive bin 0.
    assert hist_cell[0] > 0
    assert hist_cell[18] > 0
    assert np.allclose(hist_cell[1:18], 0.0)


def test_cn_table_validates_shape():
    """Test that a table with the wrong row count is rejected."""
    from PyDRTracker.exceptions import CnTableError

    with pytest.raises(CnTableError, match="32768"):
        CnTable(np.zeros((100, 10)))


def test_cn_lookup_index(cn_table):
    """Test that RGB is quantized into r + 32 g + 1024 b."""
    probabilities = cn_table.lookup(np.array([[8.0, 16.0, 255.0]]))
    assert np.array_equal(probabilities[0], cn_table.probabilities[1 + 32 * 2 + 1024 * 31])


def test_cn_gray_patch_is_empty(cn_table):
    """Test that grayscale patches contribute no color channels."""
    fm = extract_cn(Image(np.zeros((8, 8), dtype=np.uint8)), 4, cn_table)
    assert fm.channels == 0
    assert fm.grid == (2, 2)


def test_cn_probabilities_sum_to_one(cn_table, noise_frame):
    """Test that cell-averaged probabilities keep unit sum."""
    fm = extract_cn(Image(noise_frame.pixels[:16, :16]), 4, cn_table)
    assert fm.channels == 10
    assert np.allclose(fm.data.sum(axis=2), 1.0)


def test_compose_rejects_grid_mismatch():
    """Test that maps on different grids cannot be stacked."""
    with pytest.raises(ShapeMismatchError, match="compose"):
        compose([FeatureMap(np.zeros((2, 2, 1)), 4), FeatureMap(np.zeros((3, 2, 1)), 4)])


def test_hann_window_zero_border():
    """Test that the window vanishes on the border and is read-only."""
    window = hann_window(6, 8)
    assert window.shape == (6, 8)
    assert np.allclose(window[0], 0.0) and np.allclose(window[:, -1], 0.0)
    assert not window.flags.writeable


def test_apply_window_scales_every_channel():
    """Test channel-wise windowing."""
    fm = apply_window(FeatureMap(np.ones((5, 5, 3)), 4))
    assert np.allclose(fm.data[..., 0], fm.data[..., 2])
    assert fm.data[2, 2, 0] == pytest.approx(1.0)


def test_pipeline_channel_count(cn_table, noise_frame):
    """Test gray + HOG + CN channel composition."""
    patch = Image(noise_frame.pixels[:32, :32])
    assert FeaturePipeline(4, True, True, cn_table)(patch).channels == 1 + 31 + 10
    assert FeaturePipeline(4, True, False, None)(patch).channels == 1


def test_pipeline_requires_an_extractor():
    """Test that disabling every extractor is rejected."""
    with pytest.raises(ValueError, match="At least one"):
        FeaturePipeline(4, False, False, None)


def test_hog_ignores_constant_intensity_offset(rng):
    """Test that adding a constant to every pixel leaves fHOG unchanged."""
    pixels = rng.integers(0, 200, size=(32, 24, 3)).astype(np.float64)
    assert np.allclose(fhog(pixels + 20.0, 4), fhog(pixels, 4), atol=1e-12)


def test_gradients_on_4x4_ramp():
    """Test central differences with replicated borders on a 4x4 ramp."""
    from PyDRTracker.features.hog_features import _gradients

    ys, xs = np.mgrid[0:4, 0:4]
    pixels = (xs + 10 * ys).astype(np.float64)[:, :, None]
    dx, dy, magnitude = _gradients(pixels)
    assert np.array_equal(dx, np.tile([1.0, 2.0, 2.0, 1.0], (4, 1)))
    assert np.array_equal(dy, np.tile([[10.0], [20.0], [20.0], [10.0]], (1, 4)))
    assert np.allclose(magnitude, np.hypot(dx, dy))
