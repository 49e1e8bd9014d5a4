# PyDRTracker/visualization/__init__.py

from .overlay_renderer import render_overlay, save_overlay
from .chart_generator import ChartGenerator
