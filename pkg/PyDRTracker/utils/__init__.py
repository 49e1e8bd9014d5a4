# PyDRTracker/utils/__init__.py

from .logging_config import configure_logging
from .markdown_utils import create_markdown_table, create_markdown_table_from_rows
from .name_sanitizer import sanitize_file_stem
