"""Grid scans of the feasible segment of a linear constraint on three
outcomes, looking for the maximal elements of the uncertainty preorder"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple

import numpy as np

from core.exceptions import EmptyFeasibleSet, ScaleExceeded
from dist_core.dist import Dist, ScoreVector, new_dist
from majorization.order import TIE_TOL
from maxent.solvers import LinearConstraint

logger = logging.getLogger(__name__)

DEFAULT_GRID = 3001
CHUNK = 256
SEGMENT_MAX_N = 3


def segment_endpoints(E: ScoreVector, target: float,
                      tol: float = 1e-12) -> Tuple[np.ndarray, np.ndarray]:
    """Ends of {p : <E>_p = target} inside the simplex of two or three
    outcomes

    The ends lie on edges of the simplex, so every pair of outcomes is
    solved with the remaining entries at zero.
    """
    n = len(E)
    if n > SEGMENT_MAX_N:
        raise ScaleExceeded(f"segment scans handle n <= {SEGMENT_MAX_N}")
    LinearConstraint(E, target)
    energies = E.array
    found: List[np.ndarray] = []
    for i in range(n):
        if abs(energies[i] - target) <= tol:
            point = np.zeros(n)
            point[i] = 1.0
            found.append(point)
    for i, j in itertools.combinations(range(n), 2):
        if abs(energies[i] - energies[j]) <= tol:
            continue
        weight = (target - energies[j]) / (energies[i] - energies[j])
        if -tol <= weight <= 1 + tol:
            point = np.zeros(n)
            point[i], point[j] = weight, 1 - weight
            found.append(np.clip(point, 0.0, 1.0))

    unique: List[np.ndarray] = []
    for point in found:
        if not any(np.allclose(point, seen, atol=1e-12) for seen in unique):
            unique.append(point)
    if not unique:
        raise EmptyFeasibleSet(f"no distribution has <E> = {target}")
    unique.sort(key=lambda point: tuple(-point))
    return unique[0], unique[-1]


def segment_grid(E: ScoreVector, target: float,
                 grid: int = DEFAULT_GRID) -> np.ndarray:
    """`grid` equally spaced points from one end of the segment to the other"""
    start, end = segment_endpoints(E, target)
    steps = np.linspace(0.0, 1.0, grid)[:, None]
    return start[None, :] + steps * (end - start)[None, :]


def lambda_of(p: Dist) -> float:
    """λ of p_λ = (5 - λ, 3 - λ, 2λ)/8, the segment of E = (1, -1, 0) at
    target 1/4"""
    return 4.0 * float(p[2])


def _top_sums(points: np.ndarray) -> np.ndarray:
    ordered = -np.sort(-points, axis=1)
    return np.cumsum(ordered, axis=1)[:, :-1]


def _dominated_rows(chunk: np.ndarray, sums: np.ndarray,
                    tol: float) -> np.ndarray:
    """Rows of chunk strictly below some row of sums in the uncertainty order

    x is strictly below y when every top sum of y is at most that of x and
    at least one is smaller.
    """
    at_most = (sums[None, :, :] <= chunk[:, None, :] + tol).all(axis=2)
    smaller = (sums[None, :, :] < chunk[:, None, :] - tol).any(axis=2)
    return (at_most & smaller).any(axis=1)


def maximal_mask(points: np.ndarray, tol: float = TIE_TOL,
                 jobs: int = 1) -> np.ndarray:
    """Which points have no strictly more uncertain point among them"""
    sums = _top_sums(points)
    chunks = [sums[i:i + CHUNK] for i in range(0, len(sums), CHUNK)]
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        dominated = list(
            pool.map(lambda chunk: _dominated_rows(chunk, sums, tol), chunks)
        )
    return ~np.concatenate(dominated)


def maximal_on_segment(E: ScoreVector, target: float,
                       grid: int = DEFAULT_GRID, tol: float = TIE_TOL,
                       jobs: int = 1) -> List[Dist]:
    """Grid points of the feasible segment that are maximal in the sample"""
    points = segment_grid(E, target, grid)
    mask = maximal_mask(points, tol, jobs)
    logger.debug("%s of %s grid points maximal", int(mask.sum()), grid)
    maximal = points[mask]
    _, first = np.unique(maximal, axis=0, return_index=True)
    return [new_dist(maximal[i].tolist()) for i in sorted(first)]


def dominators_on_segment(p: Dist, E: ScoreVector, target: float,
                          grid: int = DEFAULT_GRID,
                          tol: float = TIE_TOL) -> List[Dist]:
    """Grid points strictly more uncertain than p"""
    points = segment_grid(E, target, grid)
    sums = _top_sums(points)
    mine = _top_sums(p.array[None, :])[0]
    at_most = (sums <= mine + tol).all(axis=1)
    smaller = (sums < mine - tol).any(axis=1)
    return [new_dist(q.tolist()) for q in points[at_most & smaller]]
