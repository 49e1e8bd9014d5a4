import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from PyDRTracker.core.response_map import ResponseMap
from PyDRTracker.exceptions import ShapeMismatchError
from PyDRTracker.regression.distractor import (
    CentralMask,
    DistractorVector,
    distractor_vector,
    dynamic_target,
    find_local_maxima,
)
from PyDRTracker.regression.gaussian_label import gaussian_label


def _bump(shape, center, height, sigma=1.0):
    rows, cols = np.mgrid[0:shape[0], 0:shape[1]]
    return height * np.exp(-((rows - center[0]) ** 2 + (cols - center[1]) ** 2) / (2 * sigma**2))


def test_gaussian_label_values():
    """Test the peak, the one-sigma value and reflection symmetry."""
    g = gaussian_label(25, 25, (16.0, 16.0), 0.25)
    assert g.sigma == pytest.approx(4.0)
    assert g.data[12, 12] == 1.0
    assert g.data[16, 12] == pytest.approx(np.exp(-0.5))
    assert np.allclose(g.data, g.data[::-1, :])


def test_gaussian_label_rejects_tiny_grid():
    """Test that grids below 3x3 are rejected."""
    with pytest.raises(ValueError, match="3x3"):
        gaussian_label(2, 5, (1.0, 1.0), 0.1)


def test_local_maxima_constant_map_is_empty():
    """Test that plateaus are not maxima."""
    assert find_local_maxima(np.ones((5, 5))) == []


def test_local_maxima_single_impulse():
    """Test that a lone impulse is the only maximum."""
    data = np.zeros((6, 7))
    data[2, 5] = 3.0
    assert find_local_maxima(ResponseMap(data)) == [((2, 5), 3.0)]


def test_local_maxima_two_bumps_in_order():
    """Test two Gaussian bumps come back in descending height."""
    data = _bump((11, 11), (2, 2), 0.6) + _bump((11, 11), (7, 7), 1.0)
    maxima = find_local_maxima(data)
    assert [cell for cell, _ in maxima] == [(7, 7), (2, 2)]
    assert maxima[0][1] == pytest.approx(1.0, abs=1e-3)


def test_local_maxima_wrap_around():
    """Test that neighbors wrap cyclically across the border."""
    data = np.zeros((5, 5))
    data[0, 0] = 1.0
    data[4, 4] = 2.0
    assert [cell for cell, _ in find_local_maxima(data)] == [(4, 4)]


def test_central_mask_extent():
    """Test that the mask rounds up and centers on the label peak."""
    mask = CentralMask(9, 9, (2.5, 3.0)).mask
    assert mask.sum() == 9
    assert mask[4, 4] and mask[3, 3] and mask[5, 5]


def test_distractor_vector_unimodal_is_identity():
    """Test that a single centered bump represses nothing."""
    R = ResponseMap(_bump((15, 15), (7, 7), 1.0))
    d = distractor_vector(R, R.peak(), (3.0, 3.0), N=30, mu=0.25)
    assert np.array_equal(d.data, np.ones((15, 15)))
    assert d.deviations == []


def test_distractor_vector_single_distractor():
    """Test d = 1 - mu * R at one off-center bump."""
    data = _bump((15, 15), (7, 7), 1.0) + _bump((15, 15), (7, 12), 0.8, sigma=0.5)
    R = ResponseMap(data)
    d = distractor_vector(R, (7, 7), (3.0, 3.0), N=30, mu=0.25)
    assert d.data[7, 12] == pytest.approx(1.0 - 0.25 * data[7, 12])
    assert d.data[7, 12] == pytest.approx(0.8, abs=1e-3)
    assert np.count_nonzero(d.data != 1.0) == 1


def test_distractor_vector_follows_peak_shift():
    """Test that an off-center peak is rolled onto the label center first."""
    data = np.zeros((15, 15))
    data[2, 3] = 1.0
    data[2, 8] = 0.5
    d = distractor_vector(ResponseMap(data), (2, 3), (3.0, 3.0), N=5, mu=0.5)
    # Peak moves from (2, 3) to (7, 7); the distractor moves by the same (5, 4).
    assert d.data[7, 12] == pytest.approx(0.75)
    assert d.data[7, 7] == 1.0


def test_distractor_vector_keeps_top_n():
    """Test that only the N strongest of 40 distractors are repressed."""
    data = np.zeros((21, 21))
    data[10, 10] = 1.0
    cells = [(r, c) for r in range(0, 20, 2) for c in range(0, 20, 2) if not (8 <= r <= 12 and 8 <= c <= 12)][:40]
    values = np.linspace(0.1, 0.9, 40)
    for cell, value in zip(cells, values):
        data[cell] = value
    d = distractor_vector(ResponseMap(data), (10, 10), (3.0, 3.0), N=30, mu=0.25)
    assert len(d.deviations) == 30
    for cell, value in zip(cells[:10], values[:10]):
        assert d.data[cell] == 1.0
    for cell, value in zip(cells[10:], values[10:]):
        assert d.data[cell] == pytest.approx(1.0 - 0.25 * value)


@settings(max_examples=40, deadline=None)
@given(
    data=arrays(np.float64, (9, 11), elements=st.floats(-1.0, 1.0, allow_nan=False)),
    mu=st.floats(0.0, 1.0),
    n=st.integers(0, 50),
)
def test_distractor_vector_bounds(data, mu, n):
    """Test d in [1 - mu, 1] with at most N deviations."""
    data = data.copy()
    data[4, 5] = 1.0
    R = ResponseMap(data)
    d = distractor_vector(R, R.peak(), (2.0, 2.0), N=n, mu=mu)
    assert np.all(d.data <= 1.0)
    assert np.all(d.data >= 1.0 - mu - 1e-12)
    assert len(d.deviations) <= n
    assert np.count_nonzero(d.data != 1.0) <= n


def test_dynamic_target_products():
    """Test g * d with identity and one repressed cell."""
    g = gaussian_label(9, 9, (4.0, 4.0), 0.5)
    assert np.array_equal(dynamic_target(g, DistractorVector.identity(9, 9)).data, g.data)
    d = np.ones((9, 9))
    d[1, 2] = 0.75
    target = dynamic_target(g, DistractorVector(d)).data
    assert target[1, 2] == pytest.approx(0.75 * g.data[1, 2])
    assert np.count_nonzero(target != g.data) == 1
    assert np.all((target >= 0) & (target <= 1))


def test_dynamic_target_shape_mismatch():
    """Test that mismatched grids are rejected."""
    g = gaussian_label(9, 9, (4.0, 4.0), 0.5)
    with pytest.raises(ShapeMismatchError, match="does not match"):
        dynamic_target(g, DistractorVector.identity(9, 8))


@pytest.mark.parametrize("sigma_factor, changed", [(1 / 16, False), (0.5, True)])
def test_repression_needs_label_mass_at_the_distractor(sigma_factor, changed):
    """Test that a cell 10 cells from the peak only alters g * d once the label reaches it."""
    g = gaussian_label(40, 40, (8.0, 8.0), sigma_factor)
    data = np.ones((40, 40))
    data[20, 30] = 0.75
    shift = np.max(np.abs(dynamic_target(g, DistractorVector(data)).data - g.data))
    assert (shift > 1e-3) is changed
    assert shift < 1e-13 or changed
