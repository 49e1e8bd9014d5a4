# PyDRTracker/__init__.py

from .core.image import Image
from .core.bbox import BBox
from .core.feature_map import FeatureMap
from .core.response_map import ResponseMap

from .config.tracker_config import TrackerConfig, load_config, save_config

from .features.feature_pipeline import FeaturePipeline
from .features.cn_features import CnTable

from .tracker.dr_tracker import DRTracker, TrackerState
from .tracker.scale_filter import ScaleFilter

from .data.sequence_loader import Sequence, load_sequence
from .data.cn_table_loader import load_cn_table

from .evaluation.ope_runner import run_ope
from .evaluation.benchmark_report import BenchmarkReport
from .evaluation.ablation_study import AblationStudy
from .evaluation.sensitivity import parameter_sweep

from .visualization.chart_generator import ChartGenerator

from .utils.markdown_utils import create_markdown_table, create_markdown_table_from_rows
from .utils.logging_config import configure_logging

from .exceptions import DRTrackError
