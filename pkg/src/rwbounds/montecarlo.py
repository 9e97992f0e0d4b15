"""Monte Carlo checks of the drawdown and minimum bounds.

Walks are simulated a chunk at a time with numpy: every live path of the
chunk advances one step per iteration until its stopping rule fires.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .adjustment import adjustment_coefficient
from .distributions import Distribution, FiniteSupport
from .errors import InvalidParameter, OverflowGuard, StepLimitExceeded
from .streams import CHUNK_SIZE, map_chunks

STEP_LIMIT = 10**9
DEFAULT_EPS = 1e-6
_EXP_LIMIT = 700.0


@dataclass(frozen=True)
class EpisodeSample:
    m_d: float
    tau: int
    overshoot: float


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    stderr: float
    n: int
    seed: int
    censored_fraction: float = 0.0


@dataclass(frozen=True)
class EpisodeBatch:
    m_d: np.ndarray
    tau: np.ndarray
    overshoot: np.ndarray

    @property
    def stopped_value(self) -> np.ndarray:
        return self.m_d - self.overshoot


def _estimate(values: np.ndarray, seed: int, censored=0.0) -> MonteCarloEstimate:
    n = values.size
    std = float(values.std(ddof=1)) if n > 1 else 0.0
    return MonteCarloEstimate(float(values.mean()), std / math.sqrt(n), n, seed, censored)


def run_episode(dist: Distribution, d: float, rng: np.random.Generator) -> EpisodeSample:
    """Walk until the first drawdown of size d and report that episode."""
    if not d > 0:
        raise InvalidParameter("d must be positive")
    s = peak = 0.0
    for n in range(1, STEP_LIMIT + 1):
        s += float(dist.sample(rng))
        if s > peak:
            peak = s
        elif peak - s >= d:
            return EpisodeSample(peak, n, peak - s)
    raise StepLimitExceeded(f"no drawdown of {d} within {STEP_LIMIT} steps")


def simulate_episodes(
    dist: Distribution, d: float, size: int, rng: np.random.Generator
) -> EpisodeBatch:
    """``size`` independent episodes, advanced in lock-step."""
    if not d > 0:
        raise InvalidParameter("d must be positive")
    s = np.zeros(size)
    peak = np.zeros(size)
    tau = np.zeros(size, dtype=np.int64)
    overshoot = np.zeros(size)
    live = np.arange(size)
    steps = 0
    while live.size:
        steps += 1
        if steps > STEP_LIMIT:
            raise StepLimitExceeded(f"no drawdown of {d} within {STEP_LIMIT} steps")
        s_live = s[live] + dist.sample(rng, live.size)
        peak_live = np.maximum(peak[live], s_live)
        gap = peak_live - s_live
        s[live], peak[live] = s_live, peak_live
        tau[live] = steps
        done = gap >= d
        overshoot[live[done]] = gap[done]
        live = live[~done]
    return EpisodeBatch(peak, tau, overshoot)


def episodes(
    dist: Distribution, d: float, n: int, seed: int, workers: int = 1,
    chunk_size: int = CHUNK_SIZE,
) -> EpisodeBatch:
    parts = map_chunks(
        lambda rng, size: simulate_episodes(dist, d, size, rng),
        n, seed, workers, chunk_size,
    )
    return EpisodeBatch(
        np.concatenate([p.m_d for p in parts]),
        np.concatenate([p.tau for p in parts]),
        np.concatenate([p.overshoot for p in parts]),
    )


def estimate_expected_max(
    dist: Distribution, d: float, n: int, seed: int, workers: int = 1,
    chunk_size: int = CHUNK_SIZE,
) -> MonteCarloEstimate:
    if n < 100:
        raise InvalidParameter("n must be at least 100")
    batch = episodes(dist, d, n, seed, workers, chunk_size)
    return _estimate(batch.m_d, seed)


def _min_depths(
    dist: Distribution, xs: np.ndarray, alpha: float, eps: float, size: int,
    rng: np.random.Generator,
) -> tuple[np.ndarray, np.ndarray]:
    """Final -min(S) per path, resolved to accuracy eps for the queried xs.

    A path stops once every indicator {-min > x} is settled, or once the
    Lundberg bound e^{-alpha (S_n + x)} on a further descent below -x drops
    under eps for the smallest unsettled x; the latter paths are censored.
    """
    margin = math.log(1 / eps) / alpha
    s = np.zeros(size)
    low = np.zeros(size)
    depth = np.zeros(size)
    censored = np.zeros(size, dtype=bool)
    live = np.arange(size)
    steps = 0
    while live.size:
        steps += 1
        if steps > STEP_LIMIT:
            raise StepLimitExceeded("minimum not resolved within the step limit")
        s_live = s[live] + dist.sample(rng, live.size)
        low_live = np.minimum(low[live], s_live)
        s[live], low[live] = s_live, low_live
        k = np.searchsorted(xs, -low_live, side="left")
        settled = k == xs.size
        x_open = xs[np.minimum(k, xs.size - 1)]
        safe = ~settled & (s_live + x_open >= margin)
        done = settled | safe
        depth[live[done]] = -low_live[done]
        censored[live[safe]] = True
        live = live[~done]
    return depth, censored


def estimate_min_tail(
    dist: Distribution, xs: Sequence[float], n: int, seed: int,
    eps: float = DEFAULT_EPS, alpha: float | None = None, workers: int = 1,
    chunk_size: int = CHUNK_SIZE,
) -> list[MonteCarloEstimate]:
    """Empirical P(-min S > x) for each x; censored paths count as 'not below'."""
    if not 0 < eps <= 1e-3:
        raise InvalidParameter("eps must lie in (0, 1e-3]")
    grid = np.asarray(xs, dtype=float)
    if grid.size == 0:
        return []
    if np.any(grid < 0) or np.any(np.diff(grid) < 0):
        raise InvalidParameter("xs must be sorted and nonnegative")
    if alpha is None:
        alpha = adjustment_coefficient(dist).alpha
    parts = map_chunks(
        lambda rng, size: _min_depths(dist, grid, alpha, eps, size, rng),
        n, seed, workers, chunk_size,
    )
    depth = np.concatenate([p[0] for p in parts])
    censored = float(np.concatenate([p[1] for p in parts]).mean())
    return [_estimate((depth > x).astype(float), seed, censored) for x in grid]


def _increment_bound(dist: Distribution) -> float:
    if isinstance(dist, FiniteSupport):
        return max(abs(dist.xs[0]), abs(dist.xs[-1]))
    return abs(dist.mean) + 10.0 * dist.std


def martingale_check(
    dist: Distribution, alpha: float, n_steps: int, n_paths: int, seed: int,
    workers: int = 1, chunk_size: int = CHUNK_SIZE,
) -> MonteCarloEstimate:
    """Estimate E[exp(-alpha S_n)], which is exactly 1."""
    if n_steps < 0 or n_paths < 2:
        raise InvalidParameter("need n_steps >= 0 and n_paths >= 2")
    if n_steps * alpha * _increment_bound(dist) > _EXP_LIMIT:
        raise OverflowGuard("exp(-alpha S_n) may overflow for these parameters")

    def chunk(rng, size):
        s = np.zeros(size)
        for _ in range(n_steps):
            s += dist.sample(rng, size)
        return np.exp(-alpha * s)

    values = np.concatenate(map_chunks(chunk, n_paths, seed, workers, chunk_size))
    if not np.all(np.isfinite(values)):
        raise OverflowGuard("non-finite exp(-alpha S_n) encountered")
    return _estimate(values, seed)


def stopped_martingale_check(
    dist: Distribution, d: float, n_paths: int, seed: int,
    alpha: float | None = None, workers: int = 1, chunk_size: int = CHUNK_SIZE,
) -> MonteCarloEstimate:
    """Estimate E[exp(-alpha S_tau)] at the first drawdown of size d."""
    if alpha is None:
        alpha = adjustment_coefficient(dist).alpha
    batch = episodes(dist, d, n_paths, seed, workers, chunk_size)
    values = np.exp(-alpha * batch.stopped_value)
    if not np.all(np.isfinite(values)):
        raise OverflowGuard("non-finite exp(-alpha S_tau) encountered")
    return _estimate(values, seed)
