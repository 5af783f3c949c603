"""Seeded random distributions for sweeps and property tests"""
from fractions import Fraction

import numpy as np

from dist_core.dist import Dist, new_dist


def random_dist(n: int, rng: np.random.Generator, alpha: float = 1.0) -> Dist:
    """Dirichlet(alpha, ..., alpha) sample"""
    return new_dist(rng.dirichlet(np.full(n, alpha)).tolist())


def random_rational_dist(n: int,
                         rng: np.random.Generator,
                         denominator: int = 12,
                         positive: bool = False) -> Dist:
    """Exact distribution whose entries are multiples of 1/denominator"""
    floor = 1 if positive else 0
    counts = rng.multinomial(denominator - floor * n, np.full(n, 1.0 / n))
    return Dist(tuple(Fraction(int(c) + floor, denominator) for c in counts))
