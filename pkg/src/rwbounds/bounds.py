"""Lundberg-type bounds on drawdown heights and on the walk minimum.

    (e^{a d} - 1)/a  <=  E[M_d]  <=  (e^{a (d + d0)} - 1)/a
    e^{-a (x + d-)}  <=  P(-min S > x)  <=  e^{-a x}

plus the Brownian reference formulas and the exact dichotomous value.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import NamedTuple, Sequence

from .adjustment import AdjustmentResult, adjustment_coefficient
from .distributions import Distribution, TwoPoint
from .excess import ExcessConstants, excess_constants
from .errors import InvalidParameter


class BoundPair(NamedTuple):
    lower: float
    upper: float

    @property
    def upper_finite(self) -> bool:
        return math.isfinite(self.upper)


def _growth(alpha: float, h: float) -> float:
    """(e^{alpha h} - 1)/alpha, +inf on overflow."""
    if math.isinf(h):
        return math.inf
    try:
        return math.expm1(alpha * h) / alpha
    except OverflowError:
        return math.inf


def expected_max_bounds(alpha: float, d: float, d_zero: float) -> BoundPair:
    if not alpha > 0 or not d > 0 or not d_zero >= 0:
        raise InvalidParameter("need alpha > 0, d > 0, d_zero >= 0")
    return BoundPair(_growth(alpha, d), _growth(alpha, d + d_zero))


def min_tail_bounds(alpha: float, x: float, d_minus: float) -> BoundPair:
    if not alpha > 0 or not x >= 0 or not d_minus >= 0:
        raise InvalidParameter("need alpha > 0, x >= 0, d_minus >= 0")
    upper = min(1.0, math.exp(-alpha * x))
    lower = min(1.0, math.exp(-alpha * (x + d_minus)))
    return BoundPair(lower, upper)


def bm_expected_max(mu: float, sigma: float, d: float) -> float:
    """E[M_d] for Brownian motion with drift mu and diffusion sigma."""
    if not (mu > 0 and sigma > 0 and d >= 0):
        raise InvalidParameter("need mu > 0, sigma > 0, d >= 0")
    return _growth(2 * mu / sigma**2, d)


def bm_min_tail(mu: float, sigma: float, x: float) -> float:
    """P(-min B > x) for Brownian motion with positive drift."""
    if not (mu > 0 and sigma > 0 and x >= 0):
        raise InvalidParameter("need mu > 0, sigma > 0, x >= 0")
    return min(1.0, math.exp(-2 * mu / sigma**2 * x))


def dichotomous_expected_max(p: float, d: float) -> float:
    """Exact E[M_d] for the +-1 walk with P(+1) = p; d is rounded up."""
    if not 0.5 < p < 1:
        raise InvalidParameter(f"p must lie in (1/2, 1), got {p}")
    if not d > 0:
        raise InvalidParameter("d must be positive")
    alpha = math.log(p / (1 - p))
    return p / (2 * p - 1) * math.expm1(alpha * math.ceil(d))


def is_unit_dichotomous(dist: Distribution) -> bool:
    return isinstance(dist, TwoPoint) and dist.x_minus == -1 and dist.x_plus == 1


@dataclass
class BoundsReport:
    alpha: float
    d: float
    excess: ExcessConstants
    emax_lower: float
    emax_upper: float
    min_tail: list[tuple[float, float, float]]
    bm_reference: dict
    riskiness: float = math.nan
    gaussian_rate: float = math.nan
    excess_unrestricted: ExcessConstants | None = None
    emax_exact: float | None = None
    cap_policy: str = "d"
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, obj: dict) -> "BoundsReport":
        obj = dict(obj)
        obj["excess"] = ExcessConstants(**obj["excess"])
        if obj.get("excess_unrestricted") is not None:
            obj["excess_unrestricted"] = ExcessConstants(**obj["excess_unrestricted"])
        obj["min_tail"] = [tuple(row) for row in obj["min_tail"]]
        obj["bm_reference"] = dict(obj["bm_reference"])
        obj["bm_reference"]["tail"] = [tuple(r) for r in obj["bm_reference"]["tail"]]
        return cls(**obj)


def bm_parameters(dist: Distribution, alpha: float) -> tuple[float, float]:
    """Drift and diffusion of the coupled BM: same drift, 2 mu / sigma^2 = alpha."""
    mu = dist.mean
    return mu, math.sqrt(2 * mu / alpha)


def report(
    dist: Distribution,
    d: float,
    xs: Sequence[float] = (),
    cap_policy: str = "d",
    adjustment: AdjustmentResult | None = None,
) -> BoundsReport:
    """Every bound for one law and drawdown size.

    ``cap_policy="d"`` restricts the excess maximization to |x| < d for the
    E[M_d] upper bound; ``"none"`` uses the unrestricted constants.  The
    minimum-tail lower bound always uses the unrestricted d-.
    """
    if cap_policy not in ("d", "none"):
        raise InvalidParameter(f"unknown cap policy {cap_policy!r}")
    if not d > 0:
        raise InvalidParameter("d must be positive")
    adj = adjustment or adjustment_coefficient(dist)
    alpha = adj.alpha
    free = excess_constants(dist, alpha, None)
    capped = excess_constants(dist, alpha, d) if cap_policy == "d" else free
    notes = []
    if not free.finite_plus or not free.finite_minus:
        notes.append("unrestricted d0 is infinite; upper bound uses cap = d")

    emax = expected_max_bounds(alpha, d, capped.d_zero)
    tail = []
    for x in xs:
        pair = min_tail_bounds(alpha, x, free.d_minus) if free.finite_minus else (
            BoundPair(0.0, min(1.0, math.exp(-alpha * x)))
        )
        tail.append((float(x), pair.lower, pair.upper))

    mu, sigma = bm_parameters(dist, alpha)
    bm = {
        "mu": mu,
        "sigma": sigma,
        "emax": bm_expected_max(mu, sigma, d),
        "tail": [(float(x), bm_min_tail(mu, sigma, x)) for x in xs],
    }
    exact = None
    if is_unit_dichotomous(dist):
        exact = dichotomous_expected_max(dist.p_plus, d)
    return BoundsReport(
        alpha=alpha,
        d=float(d),
        excess=capped,
        emax_lower=emax.lower,
        emax_upper=emax.upper,
        min_tail=tail,
        bm_reference=bm,
        riskiness=adj.riskiness,
        gaussian_rate=adj.gaussian_rate,
        excess_unrestricted=free,
        emax_exact=exact,
        cap_policy=cap_policy,
        notes=notes,
    )
