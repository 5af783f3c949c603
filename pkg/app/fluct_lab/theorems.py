"""Exact work distributions by path enumeration, with the Jarzynski
equality and the Crooks relation evaluated on them"""
import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Tuple

import numpy as np
import sympy

from core.exceptions import (
    HypothesisViolated, NotNormalized, NotStationary, OrdlabError,
    ScaleExceeded
)
from dist_core.dist import Dist
from fluct_lab.chains import (
    MarkovChainSpec, exact_stationary_dist, is_irreducible, reversed_chain,
    satisfies_detailed_balance, stationary_dist
)
from fluct_lab.energies import (
    EnergyFamily, check_energy_family, delta_F, work_of_paths
)

logger = logging.getLogger(__name__)

FORWARD = "forward"
BACKWARD = "backward"

GROUP_TOL = 1e-9
PROB_TOL = 1e-10
ENUMERATION_MAX = 10 ** 7
RATIONAL_ENUMERATION_MAX = 10 ** 5


@dataclass(frozen=True)
class WorkDistribution:
    """Law of the work: distinct values with their probabilities"""
    support: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        total = math.fsum(prob for _, prob in self.support)
        if abs(total - 1) > PROB_TOL:
            raise NotNormalized(f"work probabilities sum to {total!r}")

    @property
    def values(self) -> np.ndarray:
        return np.array([w for w, _ in self.support])

    @property
    def probs(self) -> np.ndarray:
        return np.array([prob for _, prob in self.support])

    def prob_at(self, w: float, tol: float = GROUP_TOL) -> float:
        """P(W = w) with values matched within tol"""
        values = self.values
        index = int(np.searchsorted(values, w - tol))
        if index < len(values) and abs(values[index] - w) <= tol:
            return float(self.support[index][1])
        return 0.0

    def mean_exp(self, beta: float, shift: float = 0.0) -> float:
        """E[exp(-beta (W - shift))]"""
        return math.fsum(
            prob * math.exp(-beta * (w - shift)) for w, prob in self.support
        )


def group_works(works: np.ndarray, probs: np.ndarray,
                tol: float = GROUP_TOL) -> WorkDistribution:
    """Merge work values that agree within tol, summing their mass"""
    order = np.argsort(works, kind="stable")
    support: List[Tuple[float, float]] = []
    anchor, masses = None, []
    for w, prob in zip(works[order], probs[order]):
        if anchor is not None and w - anchor <= tol:
            masses.append(prob)
            continue
        if anchor is not None:
            support.append((float(anchor), math.fsum(masses)))
        anchor, masses = w, [prob]
    if anchor is not None:
        support.append((float(anchor), math.fsum(masses)))
    return WorkDistribution(tuple(support))


def enumerate_paths(spec: MarkovChainSpec,
                    limit: int = ENUMERATION_MAX) -> Tuple[np.ndarray,
                                                           np.ndarray]:
    """Every path of length N+1 with its probability"""
    count = spec.n ** (spec.N + 1)
    if count > limit:
        raise ScaleExceeded(
            f"{spec.n}^{spec.N + 1} = {count} paths exceed {limit}"
        )
    shape = (spec.n,) * (spec.N + 1)
    paths = np.indices(shape).reshape(spec.N + 1, -1).T
    probs = spec.p0.array[paths[:, 0]]
    for step, M in enumerate(spec.mats, start=1):
        probs = probs * M[paths[:, step], paths[:, step - 1]]
    return paths, probs


def exact_work_distribution(spec: MarkovChainSpec, E: EnergyFamily,
                            direction: str = FORWARD,
                            tol: float = GROUP_TOL) -> WorkDistribution:
    """Work law of the forward process, or of the backward process that
    starts from p_N and runs the matrices and energies in reverse"""
    if direction == BACKWARD:
        spec, E = reversed_chain(spec), E.reversed()
    elif direction != FORWARD:
        raise OrdlabError(f"unknown direction {direction!r}")
    paths, probs = enumerate_paths(spec)
    reachable = probs > 0
    works = work_of_paths(paths[reachable], E)
    distribution = group_works(works, probs[reachable], tol)
    logger.debug("%s work law: %s points from %s paths", direction,
                 len(distribution.support), len(paths))
    return distribution


def check_jarzynski_hypotheses(spec: MarkovChainSpec,
                               E: EnergyFamily) -> None:
    if min(spec.p0) <= 0:
        raise HypothesisViolated(f"p0 = {spec.p0} is not strictly positive")
    for index, M in enumerate(spec.mats, start=1):
        if not is_irreducible(M):
            raise HypothesisViolated(f"M_{index} is not irreducible")
    check_energy_family(spec, E)


def jarzynski_exact(spec: MarkovChainSpec, E: EnergyFamily) -> float:
    """E[exp(-beta (W - dF))] over the exact forward work law"""
    check_jarzynski_hypotheses(spec, E)
    distribution = exact_work_distribution(spec, E)
    return distribution.mean_exp(E.beta, delta_F(E))


def check_crooks_hypotheses(spec: MarkovChainSpec, E: EnergyFamily,
                            tol: float = 1e-9) -> None:
    """p_1 = p_0 and detailed balance of every matrix"""
    check_jarzynski_hypotheses(spec, E)
    if spec.N:
        gap = np.abs(stationary_dist(spec.mats[0]).array - spec.p0.array)
        if gap.max() > tol:
            raise HypothesisViolated("p0 is not stationary for M_1")
    for index, M in enumerate(spec.mats, start=1):
        try:
            balanced = satisfies_detailed_balance(M, stationary_dist(M))
        except NotStationary as error:
            raise HypothesisViolated(f"M_{index}: {error}") from error
        if not balanced:
            raise HypothesisViolated(
                f"M_{index} does not satisfy detailed balance"
            )


class CrooksRow(NamedTuple):
    w: float
    lhs: float
    rhs: float

    @property
    def gap(self) -> float:
        return abs(self.lhs - self.rhs)


@dataclass(frozen=True)
class CrooksReport:
    """log P^F(w) - log P^B(-w) against beta (w - dF) on the forward
    support"""
    rows: Tuple[CrooksRow, ...]
    delta_F: float

    @property
    def max_gap(self) -> float:
        return max((row.gap for row in self.rows), default=0.0)


def crooks_check(spec: MarkovChainSpec, E: EnergyFamily,
                 tol: float = GROUP_TOL) -> CrooksReport:
    check_crooks_hypotheses(spec, E)
    forward = exact_work_distribution(spec, E, FORWARD, tol)
    backward = exact_work_distribution(spec, E, BACKWARD, tol)
    dF = delta_F(E)
    rows = []
    for w, prob in forward.support:
        reverse = backward.prob_at(-w, tol)
        lhs = math.log(prob) - math.log(reverse) if reverse > 0 else math.inf
        rows.append(CrooksRow(w, lhs, E.beta * (w - dF)))
    report = CrooksReport(tuple(rows), dF)
    logger.debug("crooks max gap %s", report.max_gap)
    return report


# Exact mode: in the gauge Z_n = 1, beta W = ln r with r the product of
# p_n(x_n) / p_{n+1}(x_n), a rational number when every p_n is.

@dataclass(frozen=True)
class ExactWorkDistribution:
    """Work law keyed by r = exp(beta W), with exact probabilities"""
    support: Tuple[Tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        if sum(prob for _, prob in self.support) != 1:
            raise NotNormalized("work probabilities do not sum to 1")

    def prob_at(self, ratio: Fraction) -> Fraction:
        return dict(self.support).get(Fraction(ratio), Fraction(0))

    def jarzynski(self) -> Fraction:
        """E[exp(-beta W)], exactly 1 under the Jarzynski hypotheses"""
        return sum((prob / ratio for ratio, prob in self.support),
                   Fraction(0))

    def to_float(self, beta: float = 1.0) -> WorkDistribution:
        return WorkDistribution(tuple(
            (math.log(ratio) / beta, float(prob))
            for ratio, prob in self.support
        ))


def log_prime_form(ratio: Fraction) -> sympy.Expr:
    """ln r as an integer combination of logarithms of primes"""
    exponents: Dict[int, int] = dict(sympy.factorint(ratio.numerator))
    for prime, power in sympy.factorint(ratio.denominator).items():
        exponents[prime] = exponents.get(prime, 0) - power
    return sympy.Add(*(
        power * sympy.log(prime)
        for prime, power in sorted(exponents.items())
    ))


def _exact_dists(spec: MarkovChainSpec) -> Tuple[Dist, ...]:
    return (spec.p0,) + tuple(
        exact_stationary_dist(M) for M in spec.exact_mats
    )


def rational_work_distribution(spec: MarkovChainSpec,
                               direction: str = FORWARD
                               ) -> ExactWorkDistribution:
    """Exact work law of a chain given with rational entries"""
    if not spec.exact:
        raise OrdlabError("exact mode needs rational p0 and matrices")
    if min(spec.p0) <= 0:
        raise HypothesisViolated(f"p0 = {spec.p0} is not strictly positive")
    dists = _exact_dists(spec)
    if direction == BACKWARD:
        spec = reversed_chain(spec)
        dists = tuple(reversed(dists))
    elif direction != FORWARD:
        raise OrdlabError(f"unknown direction {direction!r}")
    count = spec.n ** (spec.N + 1)
    if count > RATIONAL_ENUMERATION_MAX:
        raise ScaleExceeded(
            f"{count} paths exceed {RATIONAL_ENUMERATION_MAX} in exact mode"
        )

    laws: Dict[Fraction, Fraction] = {}
    for path in itertools.product(range(spec.n), repeat=spec.N + 1):
        prob = spec.p0[path[0]]
        ratio = Fraction(1)
        for step, M in enumerate(spec.exact_mats, start=1):
            prob *= M[path[step]][path[step - 1]]
            x = path[step - 1]
            ratio *= dists[step - 1][x] / dists[step][x]
        if prob:
            laws[ratio] = laws.get(ratio, Fraction(0)) + prob
    return ExactWorkDistribution(tuple(sorted(laws.items())))


def rational_crooks_check(spec: MarkovChainSpec
                          ) -> Tuple[Tuple[Fraction, Fraction, Fraction], ...]:
    """(r, P^F(r), P^B(1/r)) on the forward support; Crooks reads
    P^F(r) = r P^B(1/r)"""
    forward = rational_work_distribution(spec, FORWARD)
    backward = rational_work_distribution(spec, BACKWARD)
    return tuple(
        (ratio, prob, backward.prob_at(1 / ratio))
        for ratio, prob in forward.support
    )
