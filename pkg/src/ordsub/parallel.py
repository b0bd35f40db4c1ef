"""Deterministic chunked scans for the --threads option.

Work is split into contiguous chunks processed by a thread pool; each worker
reports its local result and the coordinator reduces with a fixed key, so the
outcome is bit-identical to a single-threaded scan regardless of scheduling.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def split_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Split range(total) into at most ``parts`` contiguous (lo, hi) slices."""
    parts = max(1, min(parts, total)) if total else 1
    base, extra = divmod(total, parts)
    ranges = []
    lo = 0
    for i in range(parts):
        hi = lo + base + (1 if i < extra else 0)
        if hi > lo:
            ranges.append((lo, hi))
        lo = hi
    return ranges


def map_chunks(worker: Callable[[T], R], chunks: Sequence[T], threads: int) -> list[R]:
    """Apply worker to every chunk, preserving chunk order in the result list."""
    if threads <= 1 or len(chunks) <= 1:
        return [worker(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, chunks))


def min_over_chunks(
    worker: Callable[[T], R | None],
    chunks: Sequence[T],
    threads: int,
    key: Callable[[R], object],
) -> R | None:
    """Smallest non-None worker result under ``key`` (workers report local minima)."""
    results = [r for r in map_chunks(worker, chunks, threads) if r is not None]
    if not results:
        return None
    return min(results, key=key)
