# PyDRTracker/utils/logging_config.py

import logging
import sys
from typing import Optional, TextIO

from pythonjsonlogger.json import JsonFormatter

TEXT_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
JSON_FIELDS = "%(asctime)s %(levelname)s %(name)s %(message)s"


def configure_logging(level: str = "INFO", fmt: str = "text", stream: Optional[TextIO] = None) -> logging.Handler:
    """
    Install one handler on the PyDRTracker logger.

    Args:
        level: Logging level name, e.g. "DEBUG" or "WARNING".
        fmt: "text" for human-readable lines, "json" for one JSON object per record.
        stream: Destination; stderr by default.

    Returns:
        The installed handler.

    Raises:
        ValueError: If level or fmt is unknown.
    """
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level '{level}'.")
    if fmt == "json":
        formatter = JsonFormatter(JSON_FIELDS)
    elif fmt == "text":
        formatter = logging.Formatter(TEXT_FORMAT)
    else:
        raise ValueError(f"Unknown log format '{fmt}'; use 'text' or 'json'.")

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(formatter)
    package_logger = logging.getLogger("PyDRTracker")
    for existing in list(package_logger.handlers):
        package_logger.removeHandler(existing)
    package_logger.addHandler(handler)
    package_logger.setLevel(numeric)
    return handler
