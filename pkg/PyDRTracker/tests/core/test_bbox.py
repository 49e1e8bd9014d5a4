import math

import pytest

from PyDRTracker.core.bbox import BBox


def test_bbox_center_and_size():
    """Test that the center sits at x + w/2, y + h/2."""
    box = BBox(10, 20, 30, 40)
    assert box.center == (25.0, 40.0)
    assert box.size == (30, 40)


def test_bbox_from_center_round_trips():
    """Test that from_center inverts center."""
    box = BBox.from_center((50.5, 60.25), (12.0, 8.0))
    assert box.center == pytest.approx((50.5, 60.25))
    assert box.x == pytest.approx(44.5)


def test_bbox_rejects_non_positive_extent():
    """Test that zero-width boxes are rejected."""
    with pytest.raises(ValueError, match="positive"):
        BBox(0, 0, 0, 5)


def test_bbox_parse_missing_annotation():
    """Test that NaN or non-positive annotations parse to None."""
    assert BBox.parse(["nan", 1, 2, 3]) is None
    assert BBox.parse([1, 1, 0, 3]) is None
    assert BBox.parse([1, 2, 3, 4]) == BBox(1.0, 2.0, 3.0, 4.0)


def test_bbox_iou():
    """Test overlap of identical, disjoint and half-overlapping boxes."""
    a = BBox(0, 0, 10, 10)
    assert a.iou(a) == pytest.approx(1.0)
    assert a.iou(BBox(20, 20, 5, 5)) == 0.0
    assert a.iou(BBox(5, 0, 10, 10)) == pytest.approx(50.0 / 150.0)


def test_bbox_to_line():
    """Test fixed-precision serialization."""
    assert BBox(1, 2.5, 3, math.pi).to_line() == "1.000,2.500,3.000,3.142"
