"""Seed splitting for reproducible Monte Carlo and bootstrap runs

Work is cut into fixed-size blocks; block b of stream s always draws from
SeedSequence(seed, spawn_key=(s, b)) through a Philox generator, so output
does not depend on the number of workers.
"""
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Tuple, TypeVar

import numpy as np

from core.exceptions import ParameterOutOfRange

BLOCK_SIZE = 4096
SEED_MAX = 2 ** 64 - 1

T = TypeVar('T')


def check_seed(seed: int) -> int:
    if isinstance(seed, bool) or not 0 <= int(seed) <= SEED_MAX:
        raise ParameterOutOfRange(f"seed {seed!r} is not a 64-bit unsigned")
    return int(seed)


def block_rng(seed: int, *key: int) -> np.random.Generator:
    """Counter-based generator for one block of one stream"""
    sequence = np.random.SeedSequence(check_seed(seed), spawn_key=key)
    return np.random.Generator(np.random.Philox(sequence))


def block_sizes(count: int, size: int = BLOCK_SIZE) -> List[Tuple[int, int]]:
    """(block index, block length) pairs covering count items"""
    return [
        (index, min(size, count - start))
        for index, start in enumerate(range(0, count, size))
    ]


def run_blocks(work: Callable[[int, int], T], count: int,
               jobs: int = 1, size: int = BLOCK_SIZE) -> List[T]:
    """Evaluate work(index, length) on every block, results in block order"""
    blocks = block_sizes(count, size)
    if jobs <= 1 or len(blocks) == 1:
        return [work(index, length) for index, length in blocks]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda block: work(*block), blocks))
