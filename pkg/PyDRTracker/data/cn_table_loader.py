# PyDRTracker/data/cn_table_loader.py

import logging
from functools import lru_cache
from pathlib import Path
from typing import Union

import numpy as np

from ..exceptions import CnTableError
from ..features.cn_features import CN_TABLE_ROWS, CnTable

logger = logging.getLogger(__name__)


def _probability_columns(table: np.ndarray, path: Path) -> np.ndarray:
    width = table.shape[1]
    if width in (10, 11):
        return table
    if width == 12:
        if not np.array_equal(table[:, 0], np.arange(CN_TABLE_ROWS)):
            raise CnTableError(f"{path}: leading index column must count 0..{CN_TABLE_ROWS - 1} in order.")
        return table[:, 1:]
    if width == 14:
        return table[:, 3:]
    raise CnTableError(f"{path}: expected 10, 11, 12 or 14 columns per row, got {width}.")


@lru_cache(maxsize=4)
def _load(path: str) -> CnTable:
    source = Path(path)
    if not source.is_file():
        raise CnTableError(f"Color-names table not found: {source}")
    try:
        table = np.loadtxt(source, dtype=np.float64, ndmin=2)
    except ValueError as exc:
        raise CnTableError(f"{source}: cannot parse color-names table: {exc}") from exc
    if table.shape[0] != CN_TABLE_ROWS:
        raise CnTableError(f"{source}: expected {CN_TABLE_ROWS} rows, got {table.shape[0]}.")
    table = CnTable(_probability_columns(table, source))
    logger.info("Loaded color-names table %s with %d channels", source, table.width)
    return table


def load_cn_table(path: Union[str, Path]) -> CnTable:
    """
    Read a whitespace-separated color-names table.

    Rows follow the quantized RGB order r + 32 g + 1024 b. Rows of 10 or 11
    columns are probabilities; 12 columns carry a leading index; 14 columns
    carry three leading RGB coordinates. Tables are cached per path so
    concurrent trackers share one read-only copy.

    Raises:
        CnTableError: If the file is missing or malformed.
    """
    return _load(str(Path(path).resolve()))
