"""Bootstrap intervals, kernel density estimates and the Monte Carlo
Crooks curve"""
import logging
import math
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import linregress, norm

from core.exceptions import (
    EmptySamples, OrdlabError, ParameterOutOfRange, TooFewSamples
)
from core.seeding import block_rng, run_blocks

logger = logging.getLogger(__name__)

MEAN = "mean"
MEAN_EXP_NEG = "mean_exp_neg"
BOOTSTRAP_STREAM = 2


def _statistic(name: str, beta: float):
    if name == MEAN:
        return lambda rows: rows.mean(axis=1)
    if name == MEAN_EXP_NEG:
        return lambda rows: np.exp(-beta * rows).mean(axis=1)
    raise OrdlabError(f"unknown statistic {name!r}")


def bootstrap_ci(samples: Sequence[float], resamples: int = 1000,
                 level: float = 0.99, statistic: str = MEAN,
                 beta: float = 1.0, seed: int = 0,
                 jobs: int = 1) -> Tuple[float, float]:
    """Percentile interval of the statistic over with-replacement resamples"""
    data = np.asarray(samples, dtype=float)
    if data.size == 0:
        raise EmptySamples("bootstrap needs at least one sample")
    if not 0 < level < 1:
        raise ParameterOutOfRange(f"level {level} outside (0, 1)")
    if resamples < 1:
        raise ParameterOutOfRange(f"resamples {resamples} must be positive")
    stat = _statistic(statistic, beta)

    def block(index: int, size: int) -> np.ndarray:
        rng = block_rng(seed, BOOTSTRAP_STREAM, index)
        picks = rng.integers(0, data.size, size=(size, data.size))
        return stat(data[picks])

    theta = np.concatenate(run_blocks(block, resamples, jobs))
    tail = (1 - level) / 2
    lo, hi = np.quantile(theta, [tail, 1 - tail])
    return float(lo), float(hi)


@dataclass(frozen=True, eq=False)
class KernelDensity:
    """Gaussian kernel density estimate"""
    samples: np.ndarray
    bandwidth: float

    def __call__(self, x):
        points = np.atleast_1d(np.asarray(x, dtype=float))
        z = (points[:, None] - self.samples[None, :]) / self.bandwidth
        density = norm.pdf(z).mean(axis=1) / self.bandwidth
        return density if np.ndim(x) else float(density[0])


def silverman_bandwidth(samples: np.ndarray) -> float:
    """1.06 sigma m^(-1/5)"""
    return 1.06 * float(np.std(samples, ddof=1)) * len(samples) ** -0.2


def kde_density(samples: Sequence[float],
                bandwidth: Optional[float] = None) -> KernelDensity:
    data = np.asarray(samples, dtype=float)
    if data.size < 2:
        raise TooFewSamples(f"{data.size} samples, a density needs 2")
    if bandwidth is None:
        bandwidth = silverman_bandwidth(data)
        if bandwidth <= 0:
            raise TooFewSamples("samples have no spread, pass a bandwidth")
    elif not bandwidth > 0:
        raise ParameterOutOfRange(f"bandwidth {bandwidth} is not positive")
    return KernelDensity(data, float(bandwidth))


class CurvePoint(NamedTuple):
    w: float
    lhs: float
    rhs: float


def crooks_mc_curve(forward_works: Sequence[float],
                    backward_works: Sequence[float], beta: float,
                    delta_F: float, grid: Sequence[float],
                    bandwidth: Optional[float] = None) -> List[CurvePoint]:
    """(1/beta) log(rho_F(w) / rho_B(-w)) against w - dF on a grid

    Both densities share one kernel width, by default the Silverman width
    of the forward works pooled with the negated backward works. Where a
    density underflows the left side is NaN.
    """
    if not len(forward_works) or not len(backward_works):
        raise EmptySamples("both work ensembles are needed")
    if bandwidth is None:
        pooled = np.concatenate([
            np.asarray(forward_works, dtype=float),
            -np.asarray(backward_works, dtype=float),
        ])
        bandwidth = silverman_bandwidth(pooled) if pooled.size > 1 else 0.0
        if bandwidth <= 0:
            raise TooFewSamples("work samples have no spread")
    rho_forward = kde_density(forward_works, bandwidth)
    rho_backward = kde_density(backward_works, bandwidth)
    w = np.asarray(grid, dtype=float)
    top = rho_forward(w)
    bottom = rho_backward(-w)
    with np.errstate(divide="ignore", invalid="ignore"):
        lhs = np.log(top / bottom) / beta
    lhs[~np.isfinite(lhs)] = math.nan
    missing = int(np.isnan(lhs).sum())
    if missing:
        logger.warning("%s grid points outside the density overlap", missing)
    return [CurvePoint(float(a), float(b), float(a - delta_F))
            for a, b in zip(w, lhs)]


class LinearFit(NamedTuple):
    slope: float
    intercept: float
    rvalue: float


def crooks_regression(curve: Sequence[CurvePoint]) -> LinearFit:
    """Least-squares line of lhs on w over the finite points

    Crooks predicts slope 1 and intercept -dF.
    """
    finite = [point for point in curve if math.isfinite(point.lhs)]
    if len(finite) < 2:
        raise TooFewSamples(f"{len(finite)} finite curve points")
    fit = linregress([p.w for p in finite], [p.lhs for p in finite])
    return LinearFit(float(fit.slope), float(fit.intercept),
                     float(fit.rvalue))
