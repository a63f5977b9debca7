from core.lagrangian.network import build_lagrangian_network
from core.lagrangian.solver import (
    lagrangian_objective_minimum,
    selected_count_curve,
    solve_lagrangian,
    solve_pvc_mnc,
)
from core.lagrangian.threshold import ThresholdParam

__all__ = [
    "ThresholdParam",
    "build_lagrangian_network",
    "lagrangian_objective_minimum",
    "selected_count_curve",
    "solve_lagrangian",
    "solve_pvc_mnc",
]
