# PyDRTracker/data/__init__.py

from .cn_table_loader import load_cn_table
from .sequence_loader import Sequence, load_sequence, list_sequences
from .synthetic import (
    SyntheticSequence,
    accelerating_sequence,
    distractor_sequence,
    static_sequence,
    translating_sequence,
    zooming_sequence,
)
from .result_writer import write_boxes, write_curve_csv, write_summary_json
