"""Synthetic adaptation experiment

A simulated participant picks angles on a grid; on trial n the angle is
drawn by one Metropolis step towards the Boltzmann law of the loss E_n.
Jarzynski's equality then holds for the work along each cycle of trials,
and fails for the control that picks angles uniformly at random.
"""
import logging
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from core.exceptions import ParameterOutOfRange
from dist_core.dist import uniform
from fluct_lab.chains import (
    MarkovChainSpec, metropolis_matrix, nearest_neighbour_proposal,
    reversed_chain, uniform_proposal
)
from fluct_lab.energies import EnergyFamily, delta_F
from fluct_lab.estimators import MEAN_EXP_NEG, bootstrap_ci
from fluct_lab.losses import LossModel, energies_on_grid
from fluct_lab.sampling import sample_works

logger = logging.getLogger(__name__)

DEFAULT_GRID = (-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0)
DEFAULT_THETA = (0.0, 1.0, 2.0, 1.0, 0.0)

FORWARD_STREAM = 0
BACKWARD_STREAM = 1


@dataclass(frozen=True)
class SimulationProtocol:
    """Angle grid, loss schedule and sampling sizes of one experiment"""
    loss: LossModel = field(
        default_factory=lambda: LossModel.exp_quadratic(DEFAULT_THETA)
    )
    grid: Tuple[float, ...] = DEFAULT_GRID
    beta: float = 0.5
    cycles: int = 20
    resamples: int = 1000
    level: float = 0.99
    randomized: bool = False

    def __post_init__(self):
        if len(self.grid) < 2:
            raise ParameterOutOfRange("the angle grid needs two points")
        if self.cycles < 1:
            raise ParameterOutOfRange(f"cycles {self.cycles} must be positive")

    def energies(self) -> EnergyFamily:
        return EnergyFamily.from_energies(
            self.beta, energies_on_grid(self.loss, self.grid)
        )


@dataclass(frozen=True, eq=False)
class SimulationResult:
    forward_works: np.ndarray
    backward_works: np.ndarray
    beta: float
    delta_F: float
    estimate: float
    ci: Tuple[float, float]

    @property
    def covers_one(self) -> bool:
        return self.ci[0] <= 1.0 <= self.ci[1]


def protocol_chain(protocol: SimulationProtocol,
                   E: EnergyFamily) -> MarkovChainSpec:
    """Metropolis chain for the trial energies, or the uniform control"""
    n = len(protocol.grid)
    if protocol.randomized:
        return MarkovChainSpec(
            uniform(n),
            tuple(uniform_proposal(n) for _ in range(E.N)),
        )
    proposal = nearest_neighbour_proposal(n)
    return MarkovChainSpec(
        E.dist_at(0),
        tuple(metropolis_matrix(E.dist_at(k), proposal)
              for k in range(1, E.N + 1)),
    )


def simulate_protocol(protocol: SimulationProtocol, seed: int = 0,
                      jobs: int = 1) -> SimulationResult:
    """Forward and backward work per cycle with the bootstrap interval of
    E[exp(-beta (W - dF))]"""
    E = protocol.energies()
    dF = delta_F(E)
    forward = protocol_chain(protocol, E)
    backward_E = E.reversed()
    backward = reversed_chain(forward)
    forward_works = sample_works(forward, E, protocol.cycles, seed, jobs,
                                 FORWARD_STREAM)
    backward_works = sample_works(backward, backward_E, protocol.cycles,
                                  seed, jobs, BACKWARD_STREAM)
    shifted = forward_works - dF
    estimate = float(np.exp(-protocol.beta * shifted).mean())
    ci = bootstrap_ci(shifted, protocol.resamples, protocol.level,
                      MEAN_EXP_NEG, protocol.beta, seed, jobs)
    logger.debug("seed %s: estimate %s, interval %s", seed, estimate, ci)
    return SimulationResult(forward_works, backward_works, protocol.beta,
                            dF, estimate, ci)


def coverage(protocol: SimulationProtocol, repetitions: int = 100,
             seed: int = 0, jobs: int = 1) -> int:
    """How many of `repetitions` seeded runs give an interval containing 1"""
    return sum(
        simulate_protocol(protocol, seed + rep, jobs).covers_one
        for rep in range(repetitions)
    )
