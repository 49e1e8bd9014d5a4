import io
import json
import logging

import pytest

from PyDRTracker.utils.logging_config import configure_logging
from PyDRTracker.utils.markdown_utils import create_markdown_table, create_markdown_table_from_rows
from PyDRTracker.utils.name_sanitizer import sanitize_file_stem


@pytest.fixture
def package_logger():
    logger = logging.getLogger("PyDRTracker")
    saved = (list(logger.handlers), logger.level)
    yield logger
    logger.handlers[:] = saved[0]
    logger.setLevel(saved[1])


def test_markdown_table():
    """Test key-value table rendering with float formatting."""
    table = create_markdown_table({"precision_20": 0.81234, "sequences": 2})
    assert "| precision_20 | 0.812 |" in table
    assert "| sequences | 2 |" in table


def test_markdown_table_from_rows():
    """Test row tables keep the column order."""
    table = create_markdown_table_from_rows([{"sequence": "bike1", "auc": 0.5}], ["sequence", "auc"])
    lines = table.splitlines()
    assert lines[0] == "| sequence | auc |"
    assert lines[2] == "| bike1 | 0.500 |"


def test_sanitize_file_stem():
    """Test that labels become safe file stems."""
    assert sanitize_file_stem("car 1/front") == "car_1_front"
    assert sanitize_file_stem("..hidden") == "hidden"
    assert sanitize_file_stem("   ") == "_"


def test_configure_logging_json(package_logger):
    """Test one JSON object per record with extra fields."""
    stream = io.StringIO()
    configure_logging("INFO", "json", stream)
    logging.getLogger("PyDRTracker.evaluation").info("done", extra={"sequence": "bike1"})
    record = json.loads(stream.getvalue().splitlines()[-1])
    assert record["message"] == "done"
    assert record["sequence"] == "bike1"
    assert record["levelname"] == "INFO"


def test_configure_logging_text_level(package_logger):
    """Test the level filter of the text format."""
    stream = io.StringIO()
    configure_logging("warning", "text", stream)
    logging.getLogger("PyDRTracker.tracker").info("hidden")
    logging.getLogger("PyDRTracker.tracker").warning("shown")
    assert "hidden" not in stream.getvalue()
    assert "WARNING PyDRTracker.tracker: shown" in stream.getvalue()


def test_configure_logging_rejects_unknown_values(package_logger):
    """Test that unknown levels and formats are rejected."""
    with pytest.raises(ValueError, match="log level"):
        configure_logging("LOUD")
    with pytest.raises(ValueError, match="log format"):
        configure_logging("INFO", "xml")
