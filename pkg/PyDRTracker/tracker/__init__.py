# PyDRTracker/tracker/__init__.py

from .scale_filter import ScaleFilter
from .dr_tracker import DRTracker, TrackerState, Detection, SearchGeometry, build_feature_pipeline
