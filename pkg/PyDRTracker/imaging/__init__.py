# PyDRTracker/imaging/__init__.py

from .image_io import load_image
from .patch_extractor import extract_patch, resize, resample_patch, resample_patches
