"""Loss functions used as energies of the adaptation experiment"""
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from core.exceptions import IndexOutOfRange, OrdlabError, ParameterOutOfRange

EXP_QUADRATIC = "exp_quadratic"
MEXICAN_HAT = "mexican_hat"
MIXTURE = "mixture"
KINDS = (EXP_QUADRATIC, MEXICAN_HAT, MIXTURE)


@dataclass(frozen=True)
class LossModel:
    """Loss at angle x on trial n, relative to the target angle theta_n

    exp_quadratic: 1 - exp(-(x - theta_n - b)^2)
    mexican_hat: Ricker wavelet of width sigma centred on theta_n
    mixture: weight * exp_quadratic + (1 - weight) * mexican_hat
    """
    kind: str
    theta: Tuple[float, ...]
    b: float = 0.0
    sigma: float = 4.0
    weight: float = 0.5

    def __post_init__(self):
        if self.kind not in KINDS:
            raise OrdlabError(f"unknown loss {self.kind!r}")
        if not self.sigma > 0:
            raise ParameterOutOfRange(f"sigma {self.sigma} is not positive")
        if not 0 <= self.weight <= 1:
            raise ParameterOutOfRange(f"weight {self.weight} outside [0, 1]")

    @classmethod
    def exp_quadratic(cls, theta: Sequence[float], b: float = 0.0):
        return cls(EXP_QUADRATIC, tuple(map(float, theta)), b=float(b))

    @classmethod
    def mexican_hat(cls, theta: Sequence[float], sigma: float = 4.0):
        return cls(MEXICAN_HAT, tuple(map(float, theta)), sigma=float(sigma))

    @classmethod
    def mixture(cls, theta: Sequence[float], weight: float, b: float = 0.0,
                sigma: float = 4.0):
        return cls(MIXTURE, tuple(map(float, theta)), b=float(b),
                   sigma=float(sigma), weight=float(weight))


def _exp_quadratic(x, centre: float):
    return 1.0 - np.exp(-(x - centre) ** 2)


def _mexican_hat(x, centre: float, sigma: float):
    # decaying exponent; the growing form diverges away from the centre
    scaled = (x - centre) / sigma
    amplitude = 2.0 / (math.sqrt(3.0 * sigma) * math.pi ** 0.25)
    return amplitude * (1.0 - scaled ** 2) * np.exp(-scaled ** 2 / 2.0)


def loss_energy(model: LossModel, n: int, x):
    """Loss of angle x (scalar or array) on trial n"""
    if not 0 <= n < len(model.theta):
        raise IndexOutOfRange(
            f"trial {n} outside 0..{len(model.theta) - 1}"
        )
    theta = model.theta[n]
    if model.kind == EXP_QUADRATIC:
        return _exp_quadratic(x, theta + model.b)
    if model.kind == MEXICAN_HAT:
        return _mexican_hat(x, theta, model.sigma)
    return (model.weight * _exp_quadratic(x, theta + model.b)
            + (1 - model.weight) * _mexican_hat(x, theta, model.sigma))


def energies_on_grid(model: LossModel, grid: Sequence[float]) -> np.ndarray:
    """(trials, grid points) array of losses"""
    angles = np.asarray(grid, dtype=float)
    return np.array([
        loss_energy(model, n, angles) for n in range(len(model.theta))
    ])
