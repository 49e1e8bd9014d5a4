# PyDRTracker/utils/name_sanitizer.py

import re


def sanitize_file_stem(name: str) -> str:
    """
    Convert a sequence or configuration label into a safe file stem:
    - Replace spaces with underscores
    - Replace any character other than letters, digits, '_', '-' and '.' with '_'
    - Never return an empty string or a leading dot
    """
    name = name.strip().replace(" ", "_")
    name = re.sub(r"[^A-Za-z0-9_.\-]", "_", name)
    name = name.lstrip(".")
    return name or "_"
