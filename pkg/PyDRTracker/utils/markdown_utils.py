# PyDRTracker/utils/markdown_utils.py

from typing import Dict, List


def _format(value) -> str:
    if isinstance(value, float):
        return f"{value:.3f}"
    return str(value)


def create_markdown_table(data: dict) -> str:
    """
    Creates a Markdown table from a dictionary.

    Args:
        data: Dictionary with key-value pairs

    Returns:
        Markdown-formatted table as a string
    """
    table = "| Key | Value |\n"
    table += "|:----|:------|\n"
    for key, value in data.items():
        table += f"| {key} | {_format(value)} |\n"
    return table


def create_markdown_table_from_rows(rows: List[Dict], columns: List[str]) -> str:
    """
    Create a Markdown table from a list of row dictionaries.

    Args:
        rows: One dict per table row
        columns: Keys to show, in order; the first column is left aligned

    Returns:
        Markdown-formatted table as a string
    """
    table = "| " + " | ".join(columns) + " |\n"
    table += "|:----| " + " | ".join(":----:" for _ in columns[1:]) + " |\n"
    for row in rows:
        table += "| " + " | ".join(_format(row.get(column, "")) for column in columns) + " |\n"
    return table
