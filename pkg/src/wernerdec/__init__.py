"""Exact decomposability tests for tensor powers of Werner maps."""

from .bounds import (RegionClass, analytic_criterion, analytic_threshold, classify_region,
                     lp_threshold, n1m1_criterion, positivity_criterion, quantitative_bound,
                     threshold_n1)
from .lp import LPInstance, LPOutcome, Status, build_lp, is_decomposable_werner, solve_lp
from .mu import MapDescriptor, mu_of_map
from .symmetric import hq_spectrum, is_hq_positive, is_hq_ppt, v_matrix, v_vector
from .werner import p_to_t, t_to_p, twirl, werner_map_choi, werner_state

__version__ = "0.1.0"

__all__ = [
    "RegionClass", "analytic_criterion", "analytic_threshold", "classify_region", "lp_threshold",
    "n1m1_criterion", "positivity_criterion", "quantitative_bound", "threshold_n1",
    "LPInstance", "LPOutcome", "Status", "build_lp", "is_decomposable_werner", "solve_lp",
    "MapDescriptor", "mu_of_map",
    "hq_spectrum", "is_hq_positive", "is_hq_ppt", "v_matrix", "v_vector",
    "p_to_t", "t_to_p", "twirl", "werner_map_choi", "werner_state",
]
