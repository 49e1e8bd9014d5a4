import numpy as np
import pytest

from PyDRTracker.core.feature_map import FeatureMap
from PyDRTracker.core.image import Image
from PyDRTracker.core.response_map import ResponseMap


def test_image_accepts_2d_gray():
    """Test that a 2-D array becomes a single-channel image."""
    image = Image(np.zeros((4, 6), dtype=np.uint8))
    assert image.channels == 1
    assert image.size == (6, 4)


def test_image_rejects_bad_channel_count():
    """Test that 2-channel arrays are rejected."""
    with pytest.raises(ValueError, match="shape"):
        Image(np.zeros((4, 4, 2)))


def test_image_to_gray_uses_luma_weights():
    """Test BT.601 luma conversion."""
    image = Image(np.array([[[255, 0, 0], [0, 255, 0], [0, 0, 255]]], dtype=np.uint8))
    assert image.to_gray()[0] == pytest.approx([0.299 * 255, 0.587 * 255, 0.114 * 255])


def test_feature_map_rejects_non_finite():
    """Test that NaN feature values are rejected."""
    data = np.zeros((2, 2, 1))
    data[0, 0, 0] = np.nan
    with pytest.raises(ValueError, match="finite"):
        FeatureMap(data, 4)


def test_feature_map_empty():
    """Test the zero-channel map."""
    fm = FeatureMap.empty(3, 5, 4)
    assert fm.grid == (3, 5)
    assert fm.channels == 0


def test_response_map_peak_and_normalize():
    """Test argmax, center and normalization."""
    data = np.zeros((5, 6))
    data[1, 4] = 2.0
    response = ResponseMap(data)
    assert tuple(response.peak()) == (1, 4)
    assert response.center == (2, 3)
    assert response.normalize().max_value == 1.0
    assert response.value_at((6, 10)) == 2.0


def test_response_map_normalize_rejects_non_positive():
    """Test that an all-zero response cannot be normalized."""
    with pytest.raises(ValueError, match="maximum"):
        ResponseMap(np.zeros((3, 3))).normalize()
