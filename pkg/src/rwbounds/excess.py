"""Excess constants d+, d- and d0 of an increment law.

    d+ = (1/alpha) sup_{0 < x < es}  -log E[exp(-alpha (X - x)) | X >= x]
    d- = (1/alpha) sup_{ei < x < 0}   log E[exp( alpha (x - X)) | X <  x]
    d0 = d+ + d-

A finite ``cap`` restricts the suprema to (0, min(es, cap)) and
(max(ei, -cap), 0), which keeps both constants finite for power-law tails.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .distributions import Distribution, FiniteSupport, LomaxMix
from .errors import DivergentExcess, InvalidParameter

GRID_POINTS = 256
GOLDEN_XTOL = 1e-8
_INVPHI = (math.sqrt(5) - 1) / 2


class SideExcess(NamedTuple):
    value: float
    argmax: float | None


@dataclass(frozen=True)
class ExcessConstants:
    d_plus: float
    d_minus: float
    d_zero: float
    argmax_plus: float | None
    argmax_minus: float | None
    cap: float | None
    finite_plus: bool = True
    finite_minus: bool = True
    # the supremum is approached at a domain end or a one-sided limit
    boundary_plus: bool = False
    boundary_minus: bool = False


def golden_max(f: Callable[[float], float], a: float, b: float, xtol=GOLDEN_XTOL):
    """Golden-section search for a maximum of f on [a, b]."""
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > xtol * max(1.0, abs(a) + abs(b)):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    x = c if fc >= fd else d
    return x, max(fc, fd)


def grid_max(f, lo: float, hi: float, log_spaced: bool, anchor: float):
    """Coarse grid followed by golden refinement around the best point.

    ``anchor`` is the end of [lo, hi] that log spacing accumulates at.
    Returns (x, value, on_boundary).
    """
    if log_spaced:
        span = hi - lo
        offsets = np.geomspace(span * 1e-8, span, GRID_POINTS - 1)
        if anchor == lo:
            grid = np.concatenate(([lo], lo + offsets))
        else:
            grid = np.concatenate((hi - offsets[::-1], [hi]))
    else:
        grid = np.linspace(lo, hi, GRID_POINTS)
    vals = np.array([f(float(x)) for x in grid])
    i = int(np.nanargmax(vals))
    best_x, best_v = float(grid[i]), float(vals[i])
    if i == 0 or i == len(grid) - 1:
        # monotone on the grid: the sup sits at the domain end
        if i == 0 and vals[1] < best_v or i == len(grid) - 1 and vals[-2] < best_v:
            return best_x, best_v, True
    a, b = float(grid[max(i - 1, 0)]), float(grid[min(i + 1, len(grid) - 1)])
    x, v = golden_max(f, a, b)
    if v > best_v:
        best_x, best_v = x, v
    on_boundary = best_x in (lo, hi)
    return best_x, best_v, on_boundary


def _search_limit(dist: Distribution) -> float:
    """Where an unbounded numeric search stops when no cap is given."""
    return abs(dist.mean) + 50.0 * dist.std


# ----------------------------------------------------------------------------
# finite supports: exact maximization over the atoms


def _finite_plus(dist: FiniteSupport, alpha: float, cap: float | None):
    xs = dist.xs
    top = math.inf if cap is None else cap
    best = None
    for j, xj in enumerate(xs):
        if xj <= 0:
            continue
        left = max(xs[j - 1], 0.0) if j > 0 else 0.0
        # x in (x_{j-1}, x_j] conditions on {X >= x_j}; maximand decreases in x
        if not left < min(xj, top):
            continue
        excess_at_atom = -math.log(dist.cond_upper_exp_moment(alpha, xj)) / alpha
        value = excess_at_atom + (xj - left)
        if best is None or value > best.value:
            best = SideExcess(value, left)
    return best


def _finite_minus(dist: FiniteSupport, alpha: float, cap: float | None):
    xs = dist.xs
    floor = -math.inf if cap is None else -cap
    best = None
    for j, xj in enumerate(xs):
        if xj >= 0:
            break
        right = min(xs[j + 1], 0.0) if j + 1 < len(xs) else 0.0
        # x in (x_j, x_{j+1}] conditions on {X <= x_j}; maximand increases in x
        if not max(xj, floor) < right:
            continue
        below = [(x, p) for x, p in dist.atoms if x <= xj]
        mass = math.fsum(p for _, p in below)
        cond = math.fsum(p * math.exp(alpha * (xj - x)) for x, p in below) / mass
        value = (right - xj) + math.log(cond) / alpha
        if best is None or value > best.value:
            best = SideExcess(value, right)
    return best


# ----------------------------------------------------------------------------


def _check(alpha: float, cap: float | None) -> None:
    if not alpha > 0:
        raise InvalidParameter(f"alpha must be positive, got {alpha}")
    if cap is not None and not cap > 0:
        raise InvalidParameter(f"cap must be positive, got {cap}")


def d_plus(
    dist: Distribution, alpha: float, cap: float | None = None, method: str = "auto"
) -> SideExcess:
    """Upper excess constant and the location of its supremum.

    ``method="numeric"`` forces the grid-and-golden maximizer even where the
    supremum is known to sit at x -> 0+.
    """
    _check(alpha, cap)
    if isinstance(dist, FiniteSupport):
        return _finite_plus(dist, alpha, cap)

    def f(x):
        return -math.log(dist.cond_upper_exp_moment(alpha, x)) / alpha

    if dist.is_ifr and method == "auto":
        return SideExcess(f(0.0), 0.0)
    hi = min(dist.ess_sup, math.inf if cap is None else cap)
    if math.isinf(hi):
        if isinstance(dist, LomaxMix):
            raise DivergentExcess("plus")
        hi = _search_limit(dist)
    x, v, _ = grid_max(f, 0.0, hi, math.isinf(dist.ess_sup), anchor=0.0)
    return SideExcess(v, x)


def d_minus(
    dist: Distribution, alpha: float, cap: float | None = None, method: str = "auto"
) -> SideExcess:
    """Lower excess constant; mirror image of :func:`d_plus`."""
    _check(alpha, cap)
    if isinstance(dist, FiniteSupport):
        return _finite_minus(dist, alpha, cap)

    def f(x):
        return math.log(dist.cond_lower_exp_moment(alpha, x)) / alpha

    # the lomax_mix left tail is exponential, so its maximand is flat on x < 0
    if (dist.is_ifr or isinstance(dist, LomaxMix)) and method == "auto":
        return SideExcess(f(0.0), 0.0)
    lo = max(dist.ess_inf, -math.inf if cap is None else -cap)
    if math.isinf(lo):
        lo = -_search_limit(dist)
    elif lo == dist.ess_inf:
        lo = lo * (1 - 1e-9)  # P(X < ei) = 0
    x, v, _ = grid_max(f, lo, 0.0, math.isinf(dist.ess_inf), anchor=0.0)
    return SideExcess(v, x)


def excess_constants(
    dist: Distribution, alpha: float, cap: float | None = None, method: str = "auto"
) -> ExcessConstants:
    sides = {}
    for name, fn in (("plus", d_plus), ("minus", d_minus)):
        try:
            sides[name] = fn(dist, alpha, cap, method)
        except DivergentExcess:
            sides[name] = None
    plus, minus = sides["plus"], sides["minus"]

    def unpack(side, domain_end):
        if side is None:
            return math.inf, None, False, False
        at_end = side.argmax is not None and side.argmax in domain_end
        # finite-support suprema are one-sided limits at atoms
        limit = isinstance(dist, FiniteSupport)
        return side.value, side.argmax, True, at_end or limit

    top = min(dist.ess_sup, math.inf if cap is None else cap)
    bottom = max(dist.ess_inf, -math.inf if cap is None else -cap)
    dp, ap, fp, bp = unpack(plus, (0.0, top))
    dm, am, fm, bm = unpack(minus, (0.0, bottom))
    return ExcessConstants(
        d_plus=dp,
        d_minus=dm,
        d_zero=dp + dm,
        argmax_plus=ap,
        argmax_minus=am,
        cap=cap,
        finite_plus=fp,
        finite_minus=fm,
        boundary_plus=bp,
        boundary_minus=bm,
    )
