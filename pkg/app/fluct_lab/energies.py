"""Energy families of a chain, work along paths and free-energy differences"""
import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
from scipy.special import logsumexp

from core.exceptions import (
    BadPathLength, HypothesisViolated, IndexOutOfRange, LengthMismatch,
    NonFiniteScore, ParameterOutOfRange, ZeroInitialMass
)
from dist_core.dist import Dist, new_dist
from fluct_lab.chains import MarkovChainSpec, stationary_dist

logger = logging.getLogger(__name__)

ENERGY_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class EnergyFamily:
    """Energies E_0..E_N at inverse temperature beta with partition
    values Z_n, so that p_n(x) = exp(-beta E_n(x)) / Z_n"""
    beta: float
    energies: np.ndarray
    Z: Tuple[float, ...]

    def __post_init__(self):
        if not (math.isfinite(self.beta) and self.beta > 0):
            raise ParameterOutOfRange(f"beta {self.beta!r} is not positive")
        energies = np.array(self.energies, dtype=float, ndmin=2)
        if not np.isfinite(energies).all():
            raise NonFiniteScore("non-finite energy")
        if len(self.Z) != len(energies):
            raise LengthMismatch(
                f"{len(self.Z)} partition values for {len(energies)} energies"
            )
        energies.setflags(write=False)
        object.__setattr__(self, "energies", energies)

    @classmethod
    def from_energies(cls, beta: float,
                      energies: Sequence[Sequence[float]]) -> "EnergyFamily":
        """Family with Z_n the partition function of E_n"""
        array = np.array(energies, dtype=float, ndmin=2)
        Z = tuple(float(np.exp(logsumexp(-beta * row))) for row in array)
        return cls(float(beta), array, Z)

    @property
    def N(self) -> int:
        return len(self.energies) - 1

    @property
    def n(self) -> int:
        return self.energies.shape[1]

    def dist_at(self, index: int) -> Dist:
        weights = np.exp(-self.beta * self.energies[index]) / self.Z[index]
        return new_dist((weights / weights.sum()).tolist())

    def reversed(self) -> "EnergyFamily":
        """E_N..E_0, the family of the backward process"""
        return EnergyFamily(
            self.beta, self.energies[::-1].copy(), tuple(reversed(self.Z))
        )

    def shifted(self, offsets: Sequence[float]) -> "EnergyFamily":
        """E_n + c_n; Z_n picks up the factor exp(-beta c_n)"""
        offsets = np.asarray(offsets, dtype=float)
        if len(offsets) != len(self.energies):
            raise LengthMismatch(
                f"{len(offsets)} offsets for {len(self.energies)} energies"
            )
        Z = tuple(
            z * math.exp(-self.beta * c) for z, c in zip(self.Z, offsets)
        )
        return EnergyFamily(
            self.beta, self.energies + offsets[:, None], Z
        )


def chain_dists(spec: MarkovChainSpec) -> Tuple[Dist, ...]:
    """p_0 followed by the stationary distribution of each M_n"""
    return (spec.p0,) + tuple(stationary_dist(M) for M in spec.mats)


def energy_family_from_chain(spec: MarkovChainSpec,
                             beta: float = 1.0) -> EnergyFamily:
    """E_n = -ln(p_n) / beta in the gauge Z_n = 1"""
    if min(spec.p0) <= 0:
        raise ZeroInitialMass(f"p0 = {spec.p0} has a zero entry")
    if not (math.isfinite(beta) and beta > 0):
        raise ParameterOutOfRange(f"beta {beta!r} is not positive")
    energies = np.array([-np.log(p.array) / beta for p in chain_dists(spec)])
    return EnergyFamily(float(beta), energies, (1.0,) * len(energies))


def check_energy_family(spec: MarkovChainSpec, E: EnergyFamily,
                        tol: float = ENERGY_TOL) -> None:
    """Raise unless E reproduces p_0 and the stationary distributions"""
    if E.N != spec.N or E.n != spec.n:
        raise LengthMismatch(
            f"energies for N={E.N}, n={E.n}; chain has N={spec.N}, n={spec.n}"
        )
    for index, p in enumerate(chain_dists(spec)):
        gap = np.abs(E.dist_at(index).array - p.array).max()
        if gap > tol:
            raise HypothesisViolated(
                f"E_{index} does not reproduce p_{index} (gap {gap})"
            )


def delta_F(E: EnergyFamily) -> float:
    """(1/beta)(ln Z_0 - ln Z_N)"""
    return (math.log(E.Z[0]) - math.log(E.Z[-1])) / E.beta


def _check_paths(paths: np.ndarray, E: EnergyFamily) -> None:
    if paths.shape[-1] != E.N + 1:
        raise BadPathLength(
            f"paths have {paths.shape[-1]} states, expected {E.N + 1}"
        )
    if paths.size and (paths.min() < 0 or paths.max() >= E.n):
        raise IndexOutOfRange(f"states must lie in 0..{E.n - 1}")


def work_of_path(path: Sequence[int], E: EnergyFamily) -> float:
    """W(x) = sum over n < N of E_{n+1}(x_n) - E_n(x_n)"""
    return float(work_of_paths(np.asarray([path], dtype=int), E)[0])


def work_of_paths(paths: np.ndarray, E: EnergyFamily) -> np.ndarray:
    """Work of every row of an (m, N+1) array of paths"""
    paths = np.asarray(paths, dtype=int)
    _check_paths(paths, E)
    steps = np.arange(E.N)
    visited = paths[:, :-1]
    return (E.energies[steps + 1, visited] - E.energies[steps, visited]).sum(
        axis=1
    )
