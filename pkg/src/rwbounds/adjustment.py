"""Adjustment coefficient: the positive root of E[exp(-alpha X)] = 1."""

from __future__ import annotations

import math
import sys
import warnings
from dataclasses import dataclass

from scipy import special

from .distributions import (
    DoubleExponential,
    Distribution,
    Gaussian,
    ShiftedExponential,
    TwoPoint,
)
from .errors import InvalidParameter, MomentDiverges, NoRoot, ToleranceNotMet

SOFT_RESIDUAL = 1e-8
BISECTION_RTOL = 1e-6
MAX_EXPANSIONS = 200
MAX_NEWTON = 60
EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class SolverInfo:
    method: str  # "closed_form" or "bisection_newton"
    iterations: int
    residual: float
    warning: str | None = None


@dataclass(frozen=True)
class AdjustmentResult:
    alpha: float
    riskiness: float
    gaussian_rate: float
    solver: SolverInfo


def gaussian_rate(dist: Distribution) -> float:
    """2 E[X] / Var[X], the rate a Gaussian law with the same moments would have."""
    var = dist.variance
    if not var > 0:
        raise InvalidParameter("variance must be positive")
    if math.isinf(var):
        return 0.0
    return 2 * dist.mean / var


def closed_form_alpha(dist: Distribution) -> float | None:
    """Alpha for the families where it is explicit, else None."""
    if isinstance(dist, Gaussian):
        return 2 * dist.mu / dist.sigma**2
    if isinstance(dist, DoubleExponential):
        return dist.p * dist.mu - (1 - dist.p) * dist.theta
    if isinstance(dist, ShiftedExponential):
        # 1 + a/theta = e^{a delta}; the nontrivial root sits on the W_{-1} branch
        c = dist.theta * dist.delta
        w = special.lambertw(-c * math.exp(-c), k=-1).real
        return float(dist.theta * (-w / c - 1))
    if isinstance(dist, TwoPoint) and dist.x_minus == -dist.x_plus:
        p = dist.p_plus
        return math.log(p / (1 - p)) / dist.x_plus
    return None


def _g(dist: Distribution, t: float) -> float:
    return dist.neg_exp_moment(t) - 1.0


def _bracket(dist: Distribution) -> tuple[float, float, int]:
    """Find lo < alpha < hi with g(lo) < 0 < g(hi)."""
    rate = dist.divergence_rate
    start = 2 * gaussian_rate(dist)
    if not start > 0:
        start = 1.0
    if start >= rate:
        start = 0.5 * rate
    hi, evals = start, 0
    while True:
        evals += 1
        if _g(dist, hi) > 0:
            break
        if evals > MAX_EXPANSIONS:
            raise NoRoot(f"E[exp(-tX)] stays below 1 for t < {rate}")
        # geometric growth, but never past the divergence rate
        hi = 2 * hi if 2 * hi < rate else 0.5 * (hi + rate)
    lo = 0.5 * hi
    while _g(dist, lo) >= 0:
        evals += 1
        lo *= 0.5
        if lo < 1e-300:
            raise NoRoot("no sign change near 0; E[X] is numerically zero")
    return lo, hi, evals


def solve_alpha(dist: Distribution, tol: float = 1e-12) -> tuple[float, SolverInfo]:
    """Bracketed root search: bisection to 1e-6 relative, then Newton."""
    if tol < 1e-14:
        raise InvalidParameter(f"tol must be >= 1e-14, got {tol}")
    lo, hi, iters = _bracket(dist)
    while hi - lo > BISECTION_RTOL * hi:
        mid = 0.5 * (lo + hi)
        iters += 1
        if _g(dist, mid) < 0:
            lo = mid
        else:
            hi = mid

    t = 0.5 * (lo + hi)
    res = _g(dist, t)
    for _ in range(MAX_NEWTON):
        iters += 1
        deriv = dist.neg_exp_moment_deriv(t)
        step = res / deriv if deriv != 0 else math.inf
        new = t - step
        if not lo < new < hi:
            new = 0.5 * (lo + hi)
        new_res = _g(dist, new)
        if new_res < 0:
            lo = new
        else:
            hi = new
        # stop once the residual is well inside tol or steps reach rounding level
        stalled = abs(new - t) <= 4 * EPS * max(1.0, abs(new))
        t, res = new, new_res
        if abs(res) <= 0.01 * tol or stalled:
            break

    info = SolverInfo("bisection_newton", iters, abs(res))
    if abs(res) > tol:
        if abs(res) > SOFT_RESIDUAL:
            raise ToleranceNotMet(f"residual {abs(res):.3g} after {iters} iterations")
        msg = f"residual {abs(res):.3g} above tol {tol:.3g}"
        warnings.warn(msg, RuntimeWarning, stacklevel=2)
        info = SolverInfo("bisection_newton", iters, abs(res), msg)
    return t, info


def adjustment_coefficient(
    dist: Distribution, tol: float = 1e-12, method: str = "auto"
) -> AdjustmentResult:
    """Adjustment coefficient of ``dist`` with its derived indices.

    ``method="auto"`` uses a closed form when the family has one and falls
    back to the root search otherwise; ``method="numeric"`` always searches.
    """
    if method not in ("auto", "numeric"):
        raise InvalidParameter(f"unknown method {method!r}")
    alpha = closed_form_alpha(dist) if method == "auto" else None
    if alpha is not None:
        try:
            res = abs(_g(dist, alpha))
        except MomentDiverges:  # pragma: no cover - excluded by validation
            res = math.inf
        info = SolverInfo("closed_form", 0, res)
    else:
        alpha, info = solve_alpha(dist, tol)
    return AdjustmentResult(alpha, 1.0 / alpha, gaussian_rate(dist), info)
