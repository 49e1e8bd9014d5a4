# PyDRTracker/solver/__init__.py

from .spatial_weight import SpatialWeight, build_spatial_weight, make_box_weight, make_spatial_weight
from .admm_solver import (
    AdmmParams,
    FilterBank,
    solve_v,
    solve_h,
    update_multiplier,
    update_step,
    train,
    objective,
)
