"""Deterministic, chunkable Monte Carlo trial plans.

Every trial t of a plan draws from an RNG seeded by (master_seed, t), so
results are reproducible and independent of how trials are split across
worker threads. Accumulation is left to integer-valued reducers supplied
by the caller, which keeps the totals exactly order-independent.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence, TypeVar

import numpy as np

DEFAULT_SEED = 271828

T = TypeVar("T")


@dataclass(frozen=True)
class TrialPlan:
    """A fixed number of independently seeded trials."""

    samples: int
    master_seed: int = DEFAULT_SEED
    workers: int = 1

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError(f"samples must be positive, got {self.samples}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")

    def trial_rng(self, t: int) -> np.random.Generator:
        """Generator for trial t; depends only on (master_seed, t)."""
        return np.random.default_rng(np.random.SeedSequence((self.master_seed, t)))

    def chunks(self) -> Iterator[range]:
        """Trial index ranges sized for the worker count."""
        per = max(1, min(20_000, -(-self.samples // (4 * self.workers))))
        for lo in range(0, self.samples, per):
            yield range(lo, min(lo + per, self.samples))

    def map_reduce(
        self,
        run_chunk: Callable[[range], T],
        combine: Callable[[T, T], T],
    ) -> T:
        """Run every chunk and fold the partial results together.

        ``run_chunk`` must derive all randomness from ``trial_rng`` so the
        combined result is identical for any worker count.
        """
        parts: list[T]
        chunk_list = list(self.chunks())
        if self.workers == 1 or len(chunk_list) == 1:
            parts = [run_chunk(c) for c in chunk_list]
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                parts = list(pool.map(run_chunk, chunk_list))
        result = parts[0]
        for p in parts[1:]:
            result = combine(result, p)
        return result


def mean_and_stderr(total: int, total_sq: int, samples: int) -> tuple[float, float | None]:
    """Sample mean and standard error from exact integer moment sums.

    The standard error uses the unbiased sample variance; with fewer than
    two samples it is unavailable and reported as None.
    """
    mean = total / samples
    if samples < 2:
        return mean, None
    var = (total_sq - total * total / samples) / (samples - 1)
    return mean, (max(var, 0.0) / samples) ** 0.5


def sum_vectors(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Elementwise integer sum, used as a map_reduce combiner."""
    return tuple(x + y for x, y in zip(a, b))
