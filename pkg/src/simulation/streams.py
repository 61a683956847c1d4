"""Per-replicate random streams and work partitioning."""

from typing import List, Tuple

import numpy as np

from ..errors import ConfigError


def replicate_rng(seed: int, replicate_index: int) -> np.random.Generator:
    """
    Generator for one replicate.

    The stream is derived from the entropy pair (seed, replicate_index), so a
    replicate draws the same numbers whichever worker runs it and in whatever
    order.
    """
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(replicate_index)]))


def chunk_ranges(reps: int, chunk_size: int) -> List[Tuple[int, int]]:
    """Half-open replicate ranges of at most ``chunk_size``; independent of worker count."""
    if chunk_size < 1:
        raise ConfigError(f"chunk_size must be positive, got {chunk_size}")
    return [(start, min(start + chunk_size, reps)) for start in range(0, reps, chunk_size)]
