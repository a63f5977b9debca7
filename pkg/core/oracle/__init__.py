from core.oracle.bruteforce import find_partial_cover, solve_pvc_bruteforce
from core.oracle.enumeration import (
    DEFAULT_ORACLE_MAX_N,
    non_dominated_vertices,
    subset_table,
)
from core.oracle.profile import check_mnc, enumerate_profile, opt_profile, weighted_profile

__all__ = [
    "DEFAULT_ORACLE_MAX_N",
    "check_mnc",
    "enumerate_profile",
    "find_partial_cover",
    "non_dominated_vertices",
    "opt_profile",
    "solve_pvc_bruteforce",
    "subset_table",
    "weighted_profile",
]
