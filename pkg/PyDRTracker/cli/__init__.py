# PyDRTracker/cli/__init__.py
