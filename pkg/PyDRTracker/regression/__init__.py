# PyDRTracker/regression/__init__.py

from .gaussian_label import GaussianLabel, gaussian_label
from .distractor import (
    CentralMask,
    DistractorVector,
    RegressionTarget,
    find_local_maxima,
    distractor_vector,
    dynamic_target,
)
