"""Skorokhod embeddings of finite-support laws as exit chains.

Each scheme is a Chacon-Walsh construction: a binary tree whose nodes are
contiguous blocks of atoms.  A process sitting at a block's mean exits the
interval (mean of lower sub-block, mean of upper sub-block); for a
martingale the top is hit first with probability (m - a) / (b - a).
Leaves are single atoms.  Schemes differ only in how blocks are split:

* ``dubins``: split at the block mean, recurse on both halves
* ``ay``: peel off the lowest atom (Azema-Yor)
* ``ay-minus``: peel off the highest atom (mirror Azema-Yor)
* ``day``: one Dubins split, then ``ay`` above and ``ay-minus`` below

The chain only visits block means, so the chain max/min are lower/upper
estimates of the continuous path's extremes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .adjustment import adjustment_coefficient
from .bounds import bm_expected_max, bm_parameters
from .distributions import FiniteSupport
from .errors import EmptyTail, InvalidParameter
from .excess import excess_constants
from .montecarlo import MonteCarloEstimate
from .streams import CHUNK_SIZE, map_chunks

SCHEMES = ("dubins", "ay", "ay-minus", "day")


@dataclass(frozen=True)
class AtomicDistribution:
    xs: tuple[float, ...]
    ps: tuple[float, ...]

    def __post_init__(self):
        if not self.xs or len(self.xs) != len(self.ps):
            raise InvalidParameter("need matching, non-empty atoms and probabilities")
        if any(b <= a for a, b in zip(self.xs, self.xs[1:])):
            raise InvalidParameter("atoms must be strictly increasing")
        if any(not p > 0 for p in self.ps):
            raise InvalidParameter("probabilities must be positive")
        if abs(math.fsum(self.ps) - 1) > 1e-12:
            raise InvalidParameter("probabilities must sum to 1")

    @classmethod
    def from_pairs(cls, pairs) -> "AtomicDistribution":
        pairs = sorted((float(x), float(p)) for x, p in pairs)
        return cls(tuple(x for x, _ in pairs), tuple(p for _, p in pairs))

    @classmethod
    def from_distribution(cls, dist: FiniteSupport) -> "AtomicDistribution":
        return cls(dist.xs, dist.ps)

    @property
    def atoms(self):
        return list(zip(self.xs, self.ps))

    @cached_property
    def mean(self) -> float:
        return block_mean(self, 0, len(self.xs))

    @cached_property
    def variance(self) -> float:
        m = self.mean
        return math.fsum(p * (x - m) ** 2 for x, p in zip(self.xs, self.ps))


def block_mean(F: AtomicDistribution, lo: int, hi: int) -> float:
    mass = math.fsum(F.ps[lo:hi])
    return math.fsum(x * p for x, p in zip(F.xs[lo:hi], F.ps[lo:hi])) / mass


def barycenter(F: AtomicDistribution, x: float) -> float:
    """Upper barycenter H_F(x) = E[Y | Y >= x]."""
    if x > F.xs[-1]:
        raise EmptyTail(f"P(Y >= {x}) = 0")
    lo = next(i for i, xi in enumerate(F.xs) if xi >= x)
    return block_mean(F, lo, len(F.xs))


@dataclass(frozen=True)
class EmbeddingOutcome:
    stopped_value: float
    n_exits: int
    quadratic_time: float
    chain_max: float
    chain_min: float


@dataclass(frozen=True)
class EmbeddingBatch:
    atom_index: np.ndarray
    stopped_value: np.ndarray
    n_exits: np.ndarray
    quadratic_time: np.ndarray
    chain_max: np.ndarray
    chain_min: np.ndarray

    def frequencies(self, k: int) -> np.ndarray:
        return np.bincount(self.atom_index, minlength=k) / self.atom_index.size


# ----------------------------------------------------------------------------
# compiled exit trees


@dataclass(frozen=True)
class ExitTree:
    """Flat node arrays; node 0 is the root, leaves have ``atom >= 0``."""

    position: np.ndarray
    down: np.ndarray
    up: np.ndarray
    p_up: np.ndarray
    atom: np.ndarray
    scheme: str


def _dubins_split(F: AtomicDistribution, lo: int, hi: int) -> int:
    m = block_mean(F, lo, hi)
    tol = 1e-12 * max(1.0, abs(F.xs[lo]), abs(F.xs[hi - 1]))
    s = next(i for i in range(lo, hi) if F.xs[i] >= m - tol)
    return min(max(s, lo + 1), hi - 1)


_CHILD_MODES = {
    "dubins": ("dubins", "dubins"),
    "ay": ("ay", "ay"),
    "ay-minus": ("ay-minus", "ay-minus"),
    "day": ("ay-minus", "ay"),
}


def compile_scheme(F: AtomicDistribution, scheme: str) -> ExitTree:
    if scheme not in SCHEMES:
        raise InvalidParameter(f"unknown scheme {scheme!r}; choose from {SCHEMES}")
    position, down, up, p_up, atom = [], [], [], [], []
    # explicit stack instead of recursion: (lo, hi, mode, slot to patch)
    stack = [(0, len(F.xs), scheme, None)]
    while stack:
        lo, hi, mode, parent = stack.pop()
        node = len(position)
        if parent is not None:
            (down if parent[1] == "down" else up)[parent[0]] = node
        position.append(block_mean(F, lo, hi))
        down.append(-1)
        up.append(-1)
        p_up.append(0.0)
        atom.append(lo if hi - lo == 1 else -1)
        if hi - lo == 1:
            position[node] = F.xs[lo]
            continue
        if mode in ("dubins", "day"):
            s = _dubins_split(F, lo, hi)
        elif mode == "ay":
            s = lo + 1
        else:
            s = hi - 1
        a, b, m = block_mean(F, lo, s), block_mean(F, s, hi), position[node]
        p_up[node] = (m - a) / (b - a)
        low_mode, high_mode = _CHILD_MODES[mode]
        stack.append((s, hi, high_mode, (node, "up")))
        stack.append((lo, s, low_mode, (node, "down")))
    return ExitTree(
        np.array(position), np.array(down), np.array(up), np.array(p_up),
        np.array(atom), scheme,
    )


def run_tree(tree: ExitTree, F: AtomicDistribution, size: int, rng) -> EmbeddingBatch:
    """Run ``size`` independent exit chains through a compiled tree."""
    node = np.zeros(size, dtype=np.int64)
    start = tree.position[0]
    qtime = np.zeros(size)
    exits = np.zeros(size, dtype=np.int64)
    cmax = np.full(size, start)
    cmin = np.full(size, start)
    live = np.flatnonzero(tree.atom[node] < 0)
    while live.size:
        cur = node[live]
        go_up = rng.random(live.size) < tree.p_up[cur]
        lo_child, hi_child = tree.down[cur], tree.up[cur]
        m = tree.position[cur]
        a, b = tree.position[lo_child], tree.position[hi_child]
        qtime[live] += (m - a) * (b - m)
        nxt = np.where(go_up, hi_child, lo_child)
        node[live] = nxt
        exits[live] += 1
        pos = tree.position[nxt]
        cmax[live] = np.maximum(cmax[live], pos)
        cmin[live] = np.minimum(cmin[live], pos)
        live = live[tree.atom[nxt] < 0]
    idx = tree.atom[node]
    return EmbeddingBatch(idx, np.asarray(F.xs)[idx], exits, qtime, cmax, cmin)


def embed_many(
    F: AtomicDistribution, scheme: str, n: int, seed: int, workers: int = 1,
    chunk_size: int = CHUNK_SIZE,
) -> EmbeddingBatch:
    tree = compile_scheme(F, scheme)
    parts = map_chunks(lambda rng, size: run_tree(tree, F, size, rng), n, seed,
                       workers, chunk_size)
    return EmbeddingBatch(*(np.concatenate([getattr(p, f) for p in parts])
                            for f in EmbeddingBatch.__dataclass_fields__))


def _single(F: AtomicDistribution, scheme: str, rng) -> EmbeddingOutcome:
    b = run_tree(compile_scheme(F, scheme), F, 1, rng)
    return EmbeddingOutcome(float(b.stopped_value[0]), int(b.n_exits[0]),
                            float(b.quadratic_time[0]), float(b.chain_max[0]),
                            float(b.chain_min[0]))


def dubins_embed(F: AtomicDistribution, rng) -> EmbeddingOutcome:
    return _single(F, "dubins", rng)


def azema_yor_embed(F: AtomicDistribution, rng) -> EmbeddingOutcome:
    return _single(F, "ay", rng)


def azema_yor_minus_embed(F: AtomicDistribution, rng) -> EmbeddingOutcome:
    return _single(F, "ay-minus", rng)


def day_embed(F: AtomicDistribution, rng) -> EmbeddingOutcome:
    return _single(F, "day", rng)


# ----------------------------------------------------------------------------
# random walk coupled with drifted Brownian motion


@dataclass(frozen=True)
class CouplingReport:
    n_paths: int
    d: float
    alpha: float
    d_plus: float
    d_minus: float
    violations: dict[str, int]
    m_d: MonteCarloEstimate
    bm_expected_max: float

    @property
    def total_violations(self) -> int:
        return sum(self.violations.values())


VIOLATION_KEYS = (
    "bm_drawdown_at_stop",  # chain drawdown at RW stopping < d
    "upper_reach",  # chain max >= M_d + d+
    "lower_reach",  # chain min since the RW record <= S_tau - d-
    "early_bm_drawdown",  # chain drawdown >= d + d0 before the stopping step
)


def _coupled_paths(dist, tree, bpos, d, dp, dm, size, rng):
    xs = dist.xs
    k = len(xs)
    m_d = np.empty(size)
    counts = dict.fromkeys(VIOLATION_KEYS, 0)
    down, up, p_up, atom = (
        tree.down.tolist(), tree.up.tolist(), tree.p_up.tolist(), tree.atom.tolist()
    )
    d0 = dp + dm
    for i in range(size):
        s = peak = 0.0
        cmax = seg_min = 0.0
        early = False
        while True:
            # one increment: Z starts at 1 (B at s); Z atoms run opposite to x
            node = 0
            step_min = s
            step_hit = False
            while atom[node] < 0:
                node = up[node] if rng.random() < p_up[node] else down[node]
                b = s + (xs[k - 1 - atom[node]] if atom[node] >= 0 else bpos[node])
                cmax = max(cmax, b)
                step_min = min(step_min, b)
                step_hit |= cmax - b >= d + d0 - 1e-9 * (1 + abs(b))
            s += xs[k - 1 - atom[node]]
            seg_min = min(seg_min, step_min)
            if s > peak:
                peak = seg_min = s
            elif peak - s >= d:
                break
            early |= step_hit
        tol = 1e-9 * (1 + abs(peak))
        counts["bm_drawdown_at_stop"] += cmax - s < d - tol
        counts["upper_reach"] += cmax >= peak + dp - tol
        counts["lower_reach"] += seg_min <= s - dm + tol
        counts["early_bm_drawdown"] += early
        m_d[i] = peak
    return m_d, counts


def coupled_drawdown_experiment(
    dist: FiniteSupport, d: float, n_paths: int, seed: int,
    alpha: float | None = None, workers: int = 1, chunk_size: int = CHUNK_SIZE,
) -> CouplingReport:
    """Embed the walk's exponential martingale in exp(-alpha B) with the DAY rule.

    Each increment X is realized by embedding Y = exp(-alpha X) (mean 1) in
    the martingale exp(-alpha (B - B_start)); chain positions are mapped
    back with B = -log(Z) / alpha.  Counts paths violating the almost-sure
    ordering between the BM chain and the walk.
    """
    if not isinstance(dist, FiniteSupport):
        raise InvalidParameter("coupling needs a finite-support law")
    if not d > 0:
        raise InvalidParameter("d must be positive")
    if alpha is None:
        alpha = adjustment_coefficient(dist).alpha
    exc = excess_constants(dist, alpha)
    ys = [math.exp(-alpha * x) for x in reversed(dist.xs)]
    law = AtomicDistribution(tuple(ys), tuple(reversed(dist.ps)))
    tree = compile_scheme(law, "day")
    bpos = (-np.log(tree.position) / alpha).tolist()

    parts = map_chunks(
        lambda rng, size: _coupled_paths(dist, tree, bpos, d, exc.d_plus,
                                         exc.d_minus, size, rng),
        n_paths, seed, workers, chunk_size,
    )
    m_d = np.concatenate([p[0] for p in parts])
    violations = {key: sum(p[1][key] for p in parts) for key in VIOLATION_KEYS}
    std = float(m_d.std(ddof=1)) if m_d.size > 1 else 0.0
    est = MonteCarloEstimate(float(m_d.mean()), std / math.sqrt(m_d.size),
                             m_d.size, seed)
    mu, sigma = bm_parameters(dist, alpha)
    return CouplingReport(n_paths, d, alpha, exc.d_plus, exc.d_minus, violations,
                          est, bm_expected_max(mu, sigma, d))
