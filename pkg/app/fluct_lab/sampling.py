"""Seeded path sampling and the Monte Carlo Jarzynski estimator"""
import logging

import numpy as np

from core.exceptions import ParameterOutOfRange
from core.seeding import block_rng, run_blocks
from fluct_lab.chains import MarkovChainSpec
from fluct_lab.energies import EnergyFamily, delta_F, work_of_paths

logger = logging.getLogger(__name__)


def _inverse_cdf(cdf: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Index of the first cdf entry above u, column by column

    Columns are rescaled to end at exactly 1, so for u in [0, 1) states
    after the last one with mass are never drawn.
    """
    cdf = cdf / cdf[-1:, :]
    return (cdf <= u[None, :]).sum(axis=0)


def _sample_block(spec: MarkovChainSpec, rng: np.random.Generator,
                  size: int) -> np.ndarray:
    paths = np.empty((size, spec.N + 1), dtype=np.int64)
    start = np.cumsum(spec.p0.array)[:, None]
    paths[:, 0] = _inverse_cdf(np.repeat(start, size, axis=1),
                               rng.random(size))
    for step, M in enumerate(spec.mats, start=1):
        cdf = np.cumsum(M, axis=0)
        paths[:, step] = _inverse_cdf(cdf[:, paths[:, step - 1]],
                                      rng.random(size))
    return paths


def sample_paths(spec: MarkovChainSpec, count: int, seed: int = 0,
                 jobs: int = 1, stream: int = 0) -> np.ndarray:
    """`count` independent paths as an (count, N+1) array

    The output depends on (seed, stream) only, never on `jobs`.
    """
    if count < 1:
        raise ParameterOutOfRange(f"count {count} must be at least 1")
    blocks = run_blocks(
        lambda index, size: _sample_block(
            spec, block_rng(seed, stream, index), size
        ),
        count, jobs,
    )
    logger.debug("sampled %s paths in %s blocks", count, len(blocks))
    return np.concatenate(blocks)


def sample_works(spec: MarkovChainSpec, E: EnergyFamily, count: int,
                 seed: int = 0, jobs: int = 1, stream: int = 0) -> np.ndarray:
    return work_of_paths(sample_paths(spec, count, seed, jobs, stream), E)


def jarzynski_mc(spec: MarkovChainSpec, E: EnergyFamily, count: int,
                 seed: int = 0, jobs: int = 1) -> float:
    """Sample mean of exp(-beta (W - dF))"""
    works = sample_works(spec, E, count, seed, jobs)
    return float(np.exp(-E.beta * (works - delta_F(E))).mean())
