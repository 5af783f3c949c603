"""Maximum-entropy and bounded-rationality solvers

Both principles are solved by Boltzmann distributions; the inverse
temperature is found by bisection on a strictly monotone moment.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Tuple

import numpy as np
from scipy.optimize import bisect

from core.exceptions import (
    DegenerateTarget, InfeasibleBound, NonFiniteScore, OrdlabError,
    TargetOutOfRange
)
from dist_core.dist import (
    Dist, ScoreVector, boltzmann, new_dist, shannon_entropy, uniform
)

logger = logging.getLogger(__name__)

MOMENT_TOL = 1e-10
BRACKET = (-64.0, 64.0)
BRACKET_LIMIT = 2.0 ** 20
BETA_MAX = 1e3


class BoltzmannSolution(NamedTuple):
    dist: Dist
    beta: float


@dataclass(frozen=True)
class LinearConstraint:
    """Expected score E under p fixed to `target`"""
    E: ScoreVector
    target: float

    def __post_init__(self):
        if not math.isfinite(self.target):
            raise NonFiniteScore(f"target {self.target!r}")
        low, high = min(self.E.values), max(self.E.values)
        if not low <= self.target <= high:
            raise TargetOutOfRange(
                f"target {self.target} outside [{low}, {high}]"
            )


@dataclass(frozen=True)
class Bound:
    """Lower bound on the entropy or on the expected utility"""
    kind: str
    value: float

    ENTROPY_FLOOR = "entropy_floor"
    UTILITY_FLOOR = "utility_floor"

    def __post_init__(self):
        if self.kind not in (self.ENTROPY_FLOOR, self.UTILITY_FLOOR):
            raise OrdlabError(f"unknown bound {self.kind!r}")
        if not math.isfinite(self.value):
            raise NonFiniteScore(f"bound {self.value!r}")

    @classmethod
    def entropy_floor(cls, value: float) -> "Bound":
        return cls(cls.ENTROPY_FLOOR, float(value))

    @classmethod
    def utility_floor(cls, value: float) -> "Bound":
        return cls(cls.UTILITY_FLOOR, float(value))


def expected(U: ScoreVector, p: Dist) -> float:
    return float(np.dot(U.array, p.array))


def _uniform_on(mask: np.ndarray) -> Dist:
    return new_dist((mask / mask.sum()).tolist())


def _bracket_root(func: Callable[[float], float],
                  lo: float = BRACKET[0],
                  hi: float = BRACKET[1]) -> Tuple[float, float]:
    """Widen [lo, hi] by doubling until the decreasing func changes sign"""
    while func(lo) < 0 or func(hi) > 0:
        if hi > BRACKET_LIMIT:
            raise TargetOutOfRange(
                f"no sign change of the moment within +-{BRACKET_LIMIT}"
            )
        lo, hi = 2 * lo, 2 * hi
        logger.debug("bracket widened to [%s, %s]", lo, hi)
    return lo, hi


def solve_maxent(constraint: LinearConstraint, tol: float = MOMENT_TOL,
                 strict_interior: bool = False) -> BoltzmannSolution:
    """Entropy maximizer with a fixed expected score

    The solution is proportional to exp(-beta E). At an extreme target the
    constraint forces the support; the uniform distribution on it is
    returned with an infinite beta unless `strict_interior` is set.
    """
    E = constraint.E
    energies = E.array
    target = constraint.target
    low, high = energies.min(), energies.max()

    if high - low <= tol:
        return BoltzmannSolution(uniform(len(E)), 0.0)
    if target - low <= tol or high - target <= tol:
        if strict_interior:
            raise DegenerateTarget(f"target {target} at an extreme of E")
        at_low = target - low <= tol
        mask = np.isclose(energies, low if at_low else high, atol=tol)
        logger.debug("degenerate target %s, support %s", target,
                     np.nonzero(mask)[0].tolist())
        return BoltzmannSolution(
            _uniform_on(mask.astype(float)), math.inf if at_low else -math.inf
        )
    if abs(energies.mean() - target) <= tol:
        return BoltzmannSolution(uniform(len(E)), 0.0)

    negated = -E

    def moment_gap(beta: float) -> float:
        return expected(E, boltzmann(negated, beta)) - target

    lo, hi = _bracket_root(moment_gap)
    span = high - low
    beta = bisect(moment_gap, lo, hi, xtol=tol / max(1.0, span ** 2),
                  maxiter=500)
    p = boltzmann(negated, beta)
    gap = abs(expected(E, p) - target)
    if gap > tol:
        logger.warning("maxent moment missed by %s at beta %s", gap, beta)
    logger.debug("maxent beta %s for target %s", beta, target)
    return BoltzmannSolution(p, float(beta))


def solve_bounded_rational(U: ScoreVector, bound: Bound,
                           tol: float = MOMENT_TOL,
                           beta_max: float = BETA_MAX) -> BoltzmannSolution:
    """Boltzmann policy exp(beta U)/Z under an entropy or utility floor

    entropy_floor: maximize the expected utility keeping H(p) >= H_0.
    utility_floor: maximize H(p) keeping the expected utility >= U_0.
    beta is capped at beta_max where the optimum is pure maximization.
    """
    utilities = U.array
    n = len(U)
    top = utilities.max()
    argmax = np.isclose(utilities, top, atol=tol)

    if bound.kind == Bound.ENTROPY_FLOOR:
        h0 = bound.value
        if h0 > math.log(n) + tol:
            raise InfeasibleBound(f"entropy floor {h0} above log {n}")
        if h0 >= math.log(n) - tol or np.ptp(utilities) <= tol:
            return BoltzmannSolution(uniform(n), 0.0)
        if h0 <= math.log(argmax.sum()) + tol:
            logger.warning("entropy floor %s is slack, beta capped at %s",
                           h0, beta_max)
            return BoltzmannSolution(boltzmann(U, beta_max), beta_max)

        def entropy_gap(beta: float) -> float:
            return shannon_entropy(boltzmann(U, beta)) - h0

        if entropy_gap(beta_max) > 0:
            logger.warning("entropy floor %s not reached below beta %s",
                           h0, beta_max)
            return BoltzmannSolution(boltzmann(U, beta_max), beta_max)
        beta = bisect(entropy_gap, 0.0, beta_max, xtol=tol, maxiter=500)
        return BoltzmannSolution(boltzmann(U, beta), float(beta))

    u0 = bound.value
    if u0 > top + tol:
        raise InfeasibleBound(f"utility floor {u0} above max U = {top}")
    if u0 <= utilities.mean() + tol:
        return BoltzmannSolution(uniform(n), 0.0)
    if u0 >= top - tol:
        logger.warning("utility floor %s at max U, beta capped at %s",
                       u0, beta_max)
        return BoltzmannSolution(_uniform_on(argmax.astype(float)), beta_max)

    def utility_gap(beta: float) -> float:
        return u0 - expected(U, boltzmann(U, beta))

    if utility_gap(beta_max) > 0:
        logger.warning("utility floor %s not reached below beta %s",
                       u0, beta_max)
        return BoltzmannSolution(boltzmann(U, beta_max), beta_max)
    span = np.ptp(utilities)
    beta = bisect(utility_gap, 0.0, beta_max,
                  xtol=tol / max(1.0, span ** 2), maxiter=500)
    return BoltzmannSolution(boltzmann(U, beta), float(beta))
