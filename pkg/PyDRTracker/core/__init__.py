# PyDRTracker/core/__init__.py

from .image import Image
from .bbox import BBox
from .feature_map import FeatureMap
from .response_map import ResponseMap
