"""Chunked, counter-based random streams.

An estimate over n paths is split into fixed-size chunks; chunk k draws from
a Philox generator keyed by (seed, k). Results therefore depend only on
(seed, n, chunk_size), never on how many workers process the chunks.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, TypeVar

import numpy as np

CHUNK_SIZE = 4096
DEFAULT_SEED = 0x5EED
_SEED_MASK = (1 << 64) - 1

T = TypeVar("T")


def chunk_rng(seed: int, k: int) -> np.random.Generator:
    if seed < 0 or seed > _SEED_MASK:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, k])))


def chunk_sizes(n: int, chunk_size: int = CHUNK_SIZE) -> list[int]:
    full, rest = divmod(n, chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def map_chunks(
    fn: Callable[[np.random.Generator, int], T],
    n: int,
    seed: int,
    workers: int = 1,
    chunk_size: int = CHUNK_SIZE,
) -> list[T]:
    """Apply ``fn(rng, size)`` to every chunk; results come back in chunk order."""
    sizes = chunk_sizes(n, chunk_size)
    jobs = [(chunk_rng(seed, k), size) for k, size in enumerate(sizes)]
    if workers <= 1:
        return [fn(rng, size) for rng, size in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: fn(*job), jobs))
