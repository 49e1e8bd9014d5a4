# PyDRTracker/tests/conftest.py

import numpy as np
import pytest

from PyDRTracker.core.image import Image
from PyDRTracker.data.synthetic import distractor_sequence, static_sequence, translating_sequence
from PyDRTracker.features.cn_features import CN_TABLE_ROWS, CnTable


@pytest.fixture
def rng():
    return np.random.default_rng(7)


@pytest.fixture
def noise_frame(rng):
    """A 120x160 RGB frame of uniform noise."""
    return Image(rng.integers(0, 256, size=(120, 160, 3), dtype=np.uint8))


@pytest.fixture
def cn_table():
    """A row-normalized random color-names table."""
    table = np.random.default_rng(11).random((CN_TABLE_ROWS, 10))
    return CnTable(table / table.sum(axis=1, keepdims=True))


@pytest.fixture
def cn_table_file(tmp_path, cn_table):
    path = tmp_path / "w2c.txt"
    np.savetxt(path, cn_table.probabilities, fmt="%.6f")
    return path


@pytest.fixture
def static_seq():
    return static_sequence(num_frames=6)


@pytest.fixture
def dataset_dir(tmp_path):
    """Two short synthetic sequences written in the on-disk benchmark layout."""
    root = tmp_path / "dataset"
    static_sequence(num_frames=6).write(root / "static")
    translating_sequence(num_frames=6).write(root / "translate")
    return root


@pytest.fixture
def distractor_dir(tmp_path):
    root = tmp_path / "distractors"
    distractor_sequence(num_frames=8).write(root / "distractor")
    return root
