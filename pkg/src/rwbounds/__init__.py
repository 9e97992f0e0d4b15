"""Adjustment coefficient, excess constants and Lundberg-type drawdown bounds
for random walks with positive-mean, light-tailed increments."""

from .adjustment import AdjustmentResult, adjustment_coefficient, gaussian_rate
from .bounds import (
    BoundsReport,
    bm_expected_max,
    bm_min_tail,
    dichotomous_expected_max,
    expected_max_bounds,
    min_tail_bounds,
    report,
)
from .distributions import Distribution, DistributionSpec, load_spec, validate
from .excess import ExcessConstants, d_minus, d_plus, excess_constants

__all__ = [
    "AdjustmentResult",
    "BoundsReport",
    "Distribution",
    "DistributionSpec",
    "ExcessConstants",
    "adjustment_coefficient",
    "bm_expected_max",
    "bm_min_tail",
    "d_minus",
    "d_plus",
    "dichotomous_expected_max",
    "excess_constants",
    "expected_max_bounds",
    "gaussian_rate",
    "load_spec",
    "min_tail_bounds",
    "report",
    "validate",
]
