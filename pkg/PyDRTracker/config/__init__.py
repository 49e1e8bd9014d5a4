# PyDRTracker/config/__init__.py

from .tracker_config import TrackerConfig, load_config, save_config, CN_TABLE_ENV
