# PyDRTracker/features/__init__.py

from .gray_features import extract_gray
from .hog_features import extract_hog, fhog, HOG_CHANNELS
from .cn_features import CnTable, extract_cn
from .feature_pipeline import compose, apply_window, hann_window, FeaturePipeline
